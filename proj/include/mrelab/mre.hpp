#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include "mrelab/ops.hpp"

namespace mrelab {

/// Evolving state of the relaxation system: divergence-free B, time, and the
/// regularization exponent gamma of the constitutive law.
struct MreState {
    SpectralVector B;
    double t = 0.0;
    double gamma = 0.0;
};

struct IntegratorConfig {
    std::optional<double> dt;  // nullopt = auto (CFL-based)
    double t_end = 0.0;
    double cfl = 0.4;
    int reproject_every = 1;
    /// Absolute coefficient floor applied with the periodic re-projection;
    /// 0 disables. Keeps rounding noise out of high-order norms.
    double spectral_floor = 0.0;
};

/// Raised when a step produces non-finite coefficients. Carries the last
/// valid state so callers can report the partial trajectory.
struct BlowupError : Error {
    explicit BlowupError(MreState last)
        : Error("blow-up: non-finite coefficients"),
          last_valid(std::make_shared<MreState>(std::move(last))) {}
    std::shared_ptr<MreState> last_valid;
};

/// u = (-Laplacian)^{-gamma} P div(B (x) B); zero mean, divergence-free.
SpectralVector constitutive_velocity(const SpectralVector& B, double gamma);

/// B.grad(u) - u.grad(B), products dealiased, mean pinned to zero.
SpectralVector induction_rhs(const SpectralVector& B, const SpectralVector& u);

/// dt actually used by one auto step from this state.
double auto_dt(const MreState& s, const IntegratorConfig& cfg);

/// One explicit RK4 step; dt is capped so t never overshoots cfg.t_end.
/// step_index drives the reprojection cadence.
MreState step(const MreState& s, const IntegratorConfig& cfg, long step_index = 0);

/// Advance to cfg.t_end, invoking observer(state, step_count) at t = 0, every
/// sample_every steps, and at the final time. Returns the final state.
MreState advance(MreState s, const IntegratorConfig& cfg, int sample_every,
                 const std::function<void(const MreState&, long)>& observer);

// Checkpoint file: magic "MRE1", u32 dim, u32 n per axis, f64 gamma, f64 t,
// then each component's complex f64 coefficients in row-major FFT order.
// Little-endian throughout; round trips bit-exactly.
void write_checkpoint(std::ostream& os, const MreState& s);
void write_checkpoint_file(const std::string& path, const MreState& s);
MreState read_checkpoint(std::istream& is);
MreState read_checkpoint_file(const std::string& path);

}  // namespace mrelab
