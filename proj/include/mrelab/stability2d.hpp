#pragma once

#include <vector>

#include "mrelab/mre.hpp"
#include "mrelab/norms.hpp"

namespace mrelab::stability2d {

// Analysis of the 2D, gamma = 0 dynamics near the uniform state B = e1.
// A perturbation b splits into its x1-average a = P0 b1 (a shear profile in
// x2) and the oscillatory remainder f = Pperp b; the velocity splits the same
// way. All operations below assume div b = 0, which forces P0 b2 = 0.

/// x1-average: keeps only the k1 = 0 modes.
SpectralScalar p0(const SpectralScalar& s);
SpectralVector p0(const SpectralVector& v);
/// Oscillatory part: zeroes the k1 = 0 modes.
SpectralScalar pperp(const SpectralScalar& s);
SpectralVector pperp(const SpectralVector& v);

struct PerturbationDecomposition {
    SpectralScalar a;   // k1 = 0 slice of b1
    SpectralVector f;   // b minus its k1 = 0 slice
    double p0b2_residual = 0.0;  // ||P0 b2||_{L2}, ~0 for admissible b
};

PerturbationDecomposition decompose(const SpectralVector& b);

/// p_L = 2 (-Laplacian)^{-1} (d2a d1f2), zero mean.
SpectralScalar pressure_linear(const SpectralScalar& a, const SpectralVector& f);

/// p_N = 2 (-Laplacian)^{-1} ((d1f1)^2 + d1f2 d2f1), zero mean.
SpectralScalar pressure_nonlinear(const SpectralVector& f);

/// L(f) = (1+a)^2 d1^2 f + (1+a) grad d1 p_L - d2a d2p_L e1.
/// Divergence-free with no k1 = 0 part whenever f is admissible.
SpectralVector linear_operator(const SpectralScalar& a, const SpectralVector& f);

/// w = a d1f + grad p_L + d2a f2 e1 + Pperp(f.grad f + grad p_N).
SpectralVector w_velocity(const SpectralScalar& a, const SpectralVector& f);

/// The ten-term nonlinearity driving f alongside L(f).
SpectralVector nonlinear_term(const SpectralScalar& a, const SpectralVector& f,
                              const SpectralVector& w);

/// d2 P0(2 f2 d1f1 + f2 w1 - w2 f1): the x2-profile source feeding a.
SpectralScalar a_rhs(const SpectralVector& f, const SpectralVector& w);

struct StabilityParams {
    int k = 4;        // monitor norm
    int m = 13;       // high norm, m >= k + 9
    double delta = 0.5;
    double eps = 1e-2;
};

struct DecaySample {
    double t;
    double f_hk;
};

struct DecayReport {
    std::vector<DecaySample> samples;
    double fitted_rate = 0.0;  // least-squares slope of log||f||_{Hdot k}
    double required_rate = 0.0;
    bool ok = false;
};

/// Integrates df/dt = L(f) with frozen coefficient a (RK4, fixed dt) and
/// fits the exponential decay rate of ||f||_{Hdot k}.
DecayReport linear_semigroup_run(const SpectralScalar& a_frozen, const SpectralVector& f0,
                                 double t_end, double dt, int k, double delta,
                                 int sample_every = 10);

struct BoundSample {
    double t;
    double f_hk, bound_f;    // ||f||_{Hdot k}    vs 4 eps e^{-(1-delta)t}
    double a_hk2, bound_a;   // ||a||_{H^{k+2}}   vs 4 eps
    double b_hm2, bound_b;   // ||b||^2_{Hdot m}  vs 4 eps e^{eps t}
    double b_l2;             // ||b||_{L2}        vs eps
    bool ok;
};

struct BoundReport {
    std::vector<BoundSample> samples;
    bool all_ok = false;
    double floor_used = 0.0;
};

/// Runs the full gamma = 0 dynamics on B = e1 + b0 and checks the decay and
/// boundedness envelopes at every sample. b0 must satisfy P0 b0 = 0.
/// A spectral floor pinned to the initial perturbation scale keeps rounding
/// noise out of the order-m norms (see BoundReport::floor_used).
BoundReport nonlinear_stability_experiment(const StabilityParams& p, const SpectralVector& b0,
                                           double t_end, int sample_every = 25);

std::string bound_report_csv(const BoundReport& r);

/// Least-squares slope of log(y) against t; ignores non-positive y.
double fit_log_slope(const std::vector<double>& t, const std::vector<double>& y);

}  // namespace mrelab::stability2d
