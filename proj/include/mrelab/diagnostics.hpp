#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mrelab/mre.hpp"
#include "mrelab/norms.hpp"

namespace mrelab {

/// One time-sample of scalar functionals of the state.
struct DiagnosticsRecord {
    double t = 0.0;
    double energy = 0.0;           // (1/2)||B||^2_{L2}
    double dissipation = 0.0;      // ||u||^2_{Hdot gamma}
    std::optional<double> helicity;  // 3D only
    double cross_helicity = 0.0;   // integral of u.B
    double u_lip = 0.0;            // ||grad u||_{Linf}
    double b_lip = 0.0;            // ||grad B||_{Linf}
    double criterion = 0.0;        // u_lip + b_lip^2
    double current_l2 = 0.0;       // ||curl B||_{L2}
    double tail_fraction = 0.0;
    std::map<double, double> hs_norms;  // s -> ||B||_{Hdot s}
};

double energy(const SpectralVector& B);
double dissipation(const SpectralVector& u, double gamma);
double helicity(const SpectralVector& B);  // 3D, zero-mean, divergence-free
double cross_helicity(const SpectralVector& u, const SpectralVector& B);

DiagnosticsRecord record(const MreState& s, const std::vector<double>& hs = {});

struct RunResult {
    MreState final_state;
    std::vector<DiagnosticsRecord> records;
};

/// Advance to cfg.t_end sampling diagnostics every sample_every steps; on
/// blow-up rethrows with the partial trajectory attached.
struct BlowupWithTrajectory : BlowupError {
    BlowupWithTrajectory(const BlowupError& e, std::vector<DiagnosticsRecord> partial)
        : BlowupError(e), records(std::move(partial)) {}
    std::vector<DiagnosticsRecord> records;
};

RunResult run(const MreState& s0, const IntegratorConfig& cfg, int sample_every,
              const std::vector<double>& hs = {});

std::string diagnostics_csv_header(const std::vector<double>& hs);
std::string diagnostics_csv_row(const DiagnosticsRecord& r);
void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRecord>& rows,
                           const std::vector<double>& hs);

/// Format a double with 17 significant digits (round-trip exact).
std::string format_double(double v);

}  // namespace mrelab
