#pragma once

#include "mrelab/spectral_field.hpp"

namespace mrelab {

// L^2 quantities are evaluated spectrally via Parseval with the convention
// ||f||^2_{L2} = (2 pi)^d sum_k |c(k)|^2; exact for band-limited fields.

double inner_l2(const SpectralScalar& f, const SpectralScalar& g);
double inner_l2(const SpectralVector& f, const SpectralVector& g);
double l2_norm(const SpectralScalar& f);
double l2_norm(const SpectralVector& f);

/// Homogeneous Sobolev seminorm: ((2 pi)^d sum_{k!=0} |k|^{2s} |c|^2)^{1/2}.
double sobolev_norm(const SpectralScalar& f, double s);
double sobolev_norm(const SpectralVector& f, double s);

/// Inhomogeneous variant: mean part plus the homogeneous seminorm.
double sobolev_norm_inhom(const SpectralScalar& f, double s);
double sobolev_norm_inhom(const SpectralVector& f, double s);

/// Max over collocation points of |f| (Euclidean norm for vectors).
double linf_norm(const SpectralScalar& f);
double linf_norm(const SpectralVector& f);

/// Max over collocation points of the Frobenius norm of the gradient.
double linf_gradient(const SpectralScalar& f);
double linf_gradient(const SpectralVector& f);

/// Fraction of the L2 mass carried by the outer third of the kept band,
/// i.e. modes with |k_j| > (2/3)(n_j/3) on some axis. Under-resolution gauge.
double tail_fraction(const SpectralVector& f);

}  // namespace mrelab
