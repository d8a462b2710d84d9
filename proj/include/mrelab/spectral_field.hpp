#pragma once

#include <complex>
#include <span>
#include <vector>

#include "mrelab/grid.hpp"

namespace mrelab {

using cdouble = std::complex<double>;

/// Real scalar field on the torus, stored as Fourier coefficients in FFT
/// layout with the convention  f(x) = sum_k c(k) exp(i k.x),  x in [-pi,pi]^d.
/// Hermitian symmetry c(-k) = conj(c(k)) holds up to rounding for fields
/// built from real samples and is preserved by every operation here.
class SpectralScalar {
  public:
    explicit SpectralScalar(const Grid& g) : grid_(g), c_(g.size(), cdouble{0.0, 0.0}) {}

    static SpectralScalar from_physical(const Grid& g, std::span<const double> samples);
    std::vector<double> to_physical() const;

    const Grid& grid() const { return grid_; }
    std::span<cdouble> coeffs() { return c_; }
    std::span<const cdouble> coeffs() const { return c_; }

    cdouble& operator[](std::size_t i) { return c_[i]; }
    const cdouble& operator[](std::size_t i) const { return c_[i]; }

    /// Coefficient at integer wavenumber (k0,k1[,k2]); negative k wraps.
    cdouble& at(int k0, int k1, int k2 = 0) { return c_[flat(k0, k1, k2)]; }
    const cdouble& at(int k0, int k1, int k2 = 0) const { return c_[flat(k0, k1, k2)]; }

    std::size_t flat(int k0, int k1, int k2) const;

    double max_abs_coeff() const;
    /// Largest |c(-k) - conj(c(k))| over all modes.
    double hermitian_defect() const;
    bool finite() const;

    SpectralScalar& operator+=(const SpectralScalar& o);
    SpectralScalar& operator-=(const SpectralScalar& o);
    SpectralScalar& operator*=(double s);

    friend SpectralScalar operator+(SpectralScalar a, const SpectralScalar& b) { return a += b; }
    friend SpectralScalar operator-(SpectralScalar a, const SpectralScalar& b) { return a -= b; }
    friend SpectralScalar operator*(double s, SpectralScalar a) { return a *= s; }

  private:
    Grid grid_;
    std::vector<cdouble> c_;
};

/// dim-component vector field sharing one grid.
class SpectralVector {
  public:
    explicit SpectralVector(const Grid& g) : grid_(g), comp_(g.dim(), SpectralScalar(g)) {}

    const Grid& grid() const { return grid_; }
    int dim() const { return grid_.dim(); }
    SpectralScalar& operator[](int i) { return comp_[i]; }
    const SpectralScalar& operator[](int i) const { return comp_[i]; }

    double max_abs_coeff() const;
    bool finite() const;

    SpectralVector& operator+=(const SpectralVector& o);
    SpectralVector& operator-=(const SpectralVector& o);
    SpectralVector& operator*=(double s);
    friend SpectralVector operator+(SpectralVector a, const SpectralVector& b) { return a += b; }
    friend SpectralVector operator-(SpectralVector a, const SpectralVector& b) { return a -= b; }
    friend SpectralVector operator*(double s, SpectralVector a) { return a *= s; }

  private:
    Grid grid_;
    std::vector<SpectralScalar> comp_;
};

}  // namespace mrelab
