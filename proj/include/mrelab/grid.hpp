#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <numbers>

#include "mrelab/errors.hpp"

namespace mrelab {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Uniform collocation grid on the periodic box [-pi, pi]^dim.
///
/// Wavenumbers along an axis with resolution n are the integers
/// {-n/2+1, ..., n/2} stored in FFT order (0, 1, ..., n/2, -n/2+1, ..., -1).
class Grid {
  public:
    Grid(int dim, std::array<int, 3> n) : dim_(dim), n_(n) {
        if (dim != 2 && dim != 3) throw DomainError("grid dim must be 2 or 3");
        for (int a = 0; a < dim; ++a) {
            if (n_[a] < 8 || n_[a] % 2 != 0)
                throw DomainError("grid resolution must be even and >= 8");
        }
        for (int a = dim; a < 3; ++a) n_[a] = 1;
        size_ = 1;
        for (int a = 0; a < dim; ++a) size_ *= static_cast<std::size_t>(n_[a]);
    }
    Grid(int dim, int n) : Grid(dim, std::array<int, 3>{n, n, n}) {}

    int dim() const { return dim_; }
    int n(int axis) const { return n_[axis]; }
    std::size_t size() const { return size_; }
    double spacing(int axis) const { return two_pi / n_[axis]; }
    double min_spacing() const {
        double h = spacing(0);
        for (int a = 1; a < dim_; ++a) h = h < spacing(a) ? h : spacing(a);
        return h;
    }

    /// Integer wavenumber for FFT-ordered index i along an axis.
    int wavenumber(int axis, int i) const { return i <= n_[axis] / 2 ? i : i - n_[axis]; }

    /// Collocation coordinate x_i = -pi + 2*pi*i/n.
    double coord(int axis, int i) const { return -std::numbers::pi + two_pi * i / n_[axis]; }

    bool operator==(const Grid& o) const { return dim_ == o.dim_ && n_ == o.n_; }
    bool operator!=(const Grid& o) const { return !(*this == o); }

    template <class F>
    void for_each_mode(F&& f) const {
        // f(flat_index, k0, k1, k2)
        if (dim_ == 2) {
            std::size_t idx = 0;
            for (int i0 = 0; i0 < n_[0]; ++i0) {
                const int k0 = wavenumber(0, i0);
                for (int i1 = 0; i1 < n_[1]; ++i1, ++idx) f(idx, k0, wavenumber(1, i1), 0);
            }
        } else {
            std::size_t idx = 0;
            for (int i0 = 0; i0 < n_[0]; ++i0) {
                const int k0 = wavenumber(0, i0);
                for (int i1 = 0; i1 < n_[1]; ++i1) {
                    const int k1 = wavenumber(1, i1);
                    for (int i2 = 0; i2 < n_[2]; ++i2, ++idx) f(idx, k0, k1, wavenumber(2, i2));
                }
            }
        }
    }

  private:
    int dim_;
    std::array<int, 3> n_;
    std::size_t size_;
};

}  // namespace mrelab
