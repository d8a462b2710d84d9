#pragma once

#include <functional>

#include "mrelab/errors.hpp"

namespace mrelab {

/// Adaptive Simpson integration of f over [a,b] to absolute tolerance tol.
/// Throws PrecisionError if the recursion depth limit is hit before the
/// local error estimates fall under tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-12, int max_depth = 48);

/// Golden-section maximum of f over [a,b] after a dense bracketing scan.
double maximize_scalar(const std::function<double(double)>& f, double a, double b,
                       int scan_points = 4096, double xtol = 1e-13);

}  // namespace mrelab
