#pragma once

#include <complex>
#include <vector>

#include "mrelab/grid.hpp"

namespace mrelab::fft {

/// Unnormalized c2c DFT over all grid axes, in place allowed (in == out).
/// Plans are cached per grid shape and created with FFTW_ESTIMATE so results
/// are reproducible across runs; plan execution is thread-safe.
void forward_raw(const Grid& g, const std::complex<double>* in, std::complex<double>* out);
void backward_raw(const Grid& g, const std::complex<double>* in, std::complex<double>* out);

}  // namespace mrelab::fft
