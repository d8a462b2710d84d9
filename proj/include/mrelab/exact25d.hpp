#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "mrelab/mre.hpp"
#include "mrelab/norms.hpp"

namespace mrelab::exact25d {

// Two-and-a-half-dimensional solutions of the gamma = 0 system: B = (v, g)
// with a steady 2D Euler state v = v(x1,x2) and a scalar g(x1,x2,t) obeying
// the rank-1 diffusion equation dg/dt = (v.grad)^2 g. The pair
// u = (0,0,(v.grad)g) closes the system exactly.

struct ShearFlavor {
    SpectralScalar V;  // x2-only profile, v = (V(x2), 0)
    double lambda;     // -d1^2 g0 = lambda^2 (g0 - mean g0)
};
struct HyperbolicFlavor {};
struct GenericFlavor {};

struct Rank1Problem {
    SpectralVector v;
    SpectralScalar g0;
    std::variant<ShearFlavor, HyperbolicFlavor, GenericFlavor> flavor;

    /// Enforces the invariants: v is divergence-free and a numerical Euler
    /// steady state (||P(v.grad v)||_{L2} <= 1e-10 relative), and for the
    /// shear flavor g0 solves the stated eigenvalue problem to 1e-10.
    void validate() const;
};

/// The cellular flow grad-perp(sin x1 sin x2).
SpectralVector cellular_flow(const Grid& g);
/// v = (V(x2), 0) from an x2-only profile.
SpectralVector shear_flow(const SpectralScalar& V);

/// (v.grad)(v.grad g) with dealiased products.
SpectralScalar rank1_rhs(const SpectralScalar& g, const SpectralVector& v);

/// Exact solution of dg/dt = V^2 d1^2 g for eigenfunction data:
/// g = mean(g0) + exp(-lambda^2 V(x2)^2 t) (g0 - mean(g0)).
SpectralScalar shear_closed_form(const SpectralScalar& V, const SpectralScalar& g0, double lambda,
                                 double t);

/// Embeds the 2D pair into 3D fields B = (v, g), u = (0,0,(v.grad)g).
struct AssembledState {
    SpectralVector B;
    SpectralVector u;
};
AssembledState assemble_state(const Rank1Problem& p, const SpectralScalar& g, int n3 = 8);

/// Initial data of the slow shear example: V = eps sin x2, g0 = 1 + eps cos x1,
/// i.e. B0 = e3 + eps (sin x2, 0, cos x1).
Rank1Problem shear_growth_problem(const Grid& g2d, double eps);

struct GrowthSample {
    double t;
    double norm_l2;      // ||d2 B3||_{L2(x1,x2)}
    double ratio1;       // norm_l2 / (C1 eps^{3/2} t^{1/4})
    double norm_l2linf;  // ||d2 B3||_{L2_{x1} Linf_{x2}}
    double ratio2;       // norm_l2linf / (C2 eps^2 t^{1/2})
};

struct GrowthReport {
    std::vector<GrowthSample> samples;
    double c1 = 0.0;
    double c2 = 0.0;
};

inline double growth_c1() { return std::pow(2.0 * std::pow(std::numbers::pi, 3), 0.25); }
inline double growth_c2() {
    return std::sqrt(2.0 * std::numbers::pi * std::numbers::pi / std::numbers::e);
}

/// Norm history of d2 B3 for the shear growth solution, evaluated from the
/// closed form with adaptive quadrature in x2 (the profile sharpens near
/// sin x2 = 0 as t grows, so fixed grids are not trusted here).
GrowthReport growth_report(double eps, const std::vector<double>& t_samples);

std::string growth_report_csv(const GrowthReport& r);

/// Pointwise t -> infinity limit of the shear solution. Kept as a physical
/// sampler because the limit may be discontinuous across {V = 0}.
struct LimitingState {
    std::function<double(double)> V;  // of x2
    std::function<double(double)> g0; // of x1
    double g0_mean;
    double zero_tol;

    /// Components (B1, B2, B3) at (x1, x2).
    std::array<double, 3> operator()(double x1, double x2) const {
        const double Vv = V(x2);
        if (std::abs(Vv) > zero_tol) return {Vv, 0.0, g0_mean};
        return {0.0, 0.0, g0(x1)};
    }
};

LimitingState limiting_state(std::function<double(double)> V, const SpectralScalar& g0,
                             double zero_tol = 1e-14);

struct SheetPlane {
    double x2;                         // plane location
    std::vector<double> x1;            // sample abscissae
    std::vector<double> jump_b3;       // B3(x2+) - B3(x2-) at each x1
    std::vector<double> sheet_current; // tangential current amplitude (e1 component)
};

struct SheetReport {
    std::vector<SheetPlane> planes;
    /// Bounded current away from the planes: curl of the limiting state,
    /// (d2 B3, -d1 B3, -V'(x2)) with V' by central differences.
    std::function<std::array<double, 3>(double, double)> bounded_current;
};

SheetReport current_sheet_report(std::function<double(double)> V, const SpectralScalar& g0,
                                 int n_x1_samples = 256, double zero_tol = 1e-14);

struct HyperbolicSample {
    double t;
    double d1g_origin;    // d1 g at x = 0, spectral interpolation
    double ratio_exp;     // d1g_origin / (e^t d1 g0(0,0))
    double grad_linf;     // Frobenius max of grad(v, g)
    double tail_fraction;
};

struct HyperbolicReport {
    std::vector<HyperbolicSample> samples;
    double fitted_rate = 0.0;
    double certified_t = 0.0;  // last time with tail_fraction below threshold
    bool lower_bound_ok = false;  // |d1g0(0,0)| e^t <= grad_linf at all samples
    SpectralScalar g_final;
};

/// Integrates the rank-1 equation with the cellular flow by RK4 under the
/// h^2 CFL cap, tracking the origin derivative trace and resolution.
HyperbolicReport hyperbolic_experiment(const SpectralScalar& g0, double t_end,
                                       int sample_every = 50, double cfl = 0.4,
                                       double tail_threshold = 1e-3);

std::string hyperbolic_report_csv(const HyperbolicReport& r);

/// One RK4 step of dg/dt = (v.grad)^2 g.
SpectralScalar step_rank1(const SpectralScalar& g, const SpectralVector& v, double dt);

/// dt = cfl h^2 / (2 max(1, ||v||_inf^2)).
double rank1_auto_dt(const SpectralVector& v, double cfl);

/// d1 g evaluated at the origin by summing the spectral series.
double d1_at_origin(const SpectralScalar& g);

}  // namespace mrelab::exact25d
