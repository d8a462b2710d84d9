#pragma once

#include "mrelab/spectral_field.hpp"

namespace mrelab {

/// d/dx_axis as the Fourier multiplier i*k; the Nyquist mode k = n/2 is
/// zeroed so derivatives of real fields stay real.
SpectralScalar derivative(const SpectralScalar& s, int axis);
SpectralVector derivative(const SpectralVector& v, int axis);

SpectralVector gradient(const SpectralScalar& s);
SpectralScalar divergence(const SpectralVector& v);

/// (-Laplacian)^{-gamma}: multiplies mode k != 0 by |k|^{-2 gamma}.
/// The input must have zero mean; gamma = 0 is the identity.
SpectralScalar inv_fractional_laplacian(const SpectralScalar& s, double gamma);
SpectralVector inv_fractional_laplacian(const SpectralVector& v, double gamma);

/// Projection onto divergence-free fields, (I - k k^T/|k|^2) mode-wise.
SpectralVector leray_project(const SpectralVector& v);

SpectralVector curl(const SpectralVector& v);     // 3D
SpectralScalar curl2d(const SpectralVector& v);   // d1 v2 - d2 v1

/// Zero-mean vector potential A = (-Laplacian)^{-1} curl B (3D).
SpectralVector vector_potential(const SpectralVector& B);

/// Two-thirds rule: zero every mode with 3|k_j| > n_j on some axis.
void dealias_inplace(SpectralScalar& s);
SpectralScalar dealias(SpectralScalar s);
SpectralVector dealias(SpectralVector v);
bool mode_kept(const Grid& g, int k0, int k1, int k2);

/// Pointwise product evaluated on the collocation grid, then dealiased.
SpectralScalar dealiased_product(const SpectralScalar& a, const SpectralScalar& b);
SpectralScalar dealiased_product(std::span<const double> a_phys, const SpectralScalar& b);

/// Max |divergence| coefficient relative to the largest coefficient of v.
double divergence_defect(const SpectralVector& v);

/// Average the c(k)/conj(c(-k)) pairs; repairs rounding-level asymmetry.
void hermitian_symmetrize(SpectralScalar& s);
void hermitian_symmetrize(SpectralVector& v);

/// Zero every nonzero-mode coefficient with |c| < floor_abs.
void spectral_floor(SpectralVector& v, double floor_abs);

double mean_value(const SpectralScalar& s);  // coefficient at k = 0 (real part)

}  // namespace mrelab
