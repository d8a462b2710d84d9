#include "mrelab/spectral_field.hpp"

#include <cmath>

#include "mrelab/fft.hpp"

namespace mrelab {

namespace {

// Collocation points sit at x = -pi + 2*pi*j/n while the raw DFT assumes
// x = 2*pi*j/n; the shift is the per-mode sign (-1)^(k0+k1+k2), which equals
// the parity of the index sum because every n is even.
void apply_shift_sign(const Grid& g, std::vector<cdouble>& c) {
    if (g.dim() == 2) {
        std::size_t idx = 0;
        for (int i0 = 0; i0 < g.n(0); ++i0)
            for (int i1 = 0; i1 < g.n(1); ++i1, ++idx)
                if ((i0 + i1) & 1) c[idx] = -c[idx];
    } else {
        std::size_t idx = 0;
        for (int i0 = 0; i0 < g.n(0); ++i0)
            for (int i1 = 0; i1 < g.n(1); ++i1)
                for (int i2 = 0; i2 < g.n(2); ++i2, ++idx)
                    if ((i0 + i1 + i2) & 1) c[idx] = -c[idx];
    }
}

}  // namespace

SpectralScalar SpectralScalar::from_physical(const Grid& g, std::span<const double> samples) {
    if (samples.size() != g.size()) throw ShapeError("sample count does not match grid");
    SpectralScalar out(g);
    std::vector<cdouble> buf(samples.begin(), samples.end());
    fft::forward_raw(g, buf.data(), out.c_.data());
    const double inv = 1.0 / static_cast<double>(g.size());
    for (auto& z : out.c_) z *= inv;
    apply_shift_sign(g, out.c_);
    return out;
}

std::vector<double> SpectralScalar::to_physical() const {
    std::vector<cdouble> buf = c_;
    apply_shift_sign(grid_, buf);
    std::vector<cdouble> out(grid_.size());
    fft::backward_raw(grid_, buf.data(), out.data());
    std::vector<double> phys(grid_.size());
    for (std::size_t i = 0; i < phys.size(); ++i) phys[i] = out[i].real();
    return phys;
}

std::size_t SpectralScalar::flat(int k0, int k1, int k2) const {
    auto wrap = [&](int k, int axis) {
        const int n = grid_.n(axis);
        return static_cast<std::size_t>(((k % n) + n) % n);
    };
    if (grid_.dim() == 2) return wrap(k0, 0) * grid_.n(1) + wrap(k1, 1);
    return (wrap(k0, 0) * grid_.n(1) + wrap(k1, 1)) * grid_.n(2) + wrap(k2, 2);
}

double SpectralScalar::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& z : c_) m = std::max(m, std::abs(z));
    return m;
}

double SpectralScalar::hermitian_defect() const {
    double m = 0.0;
    grid_.for_each_mode([&](std::size_t idx, int k0, int k1, int k2) {
        const cdouble mirror = c_[flat(-k0, -k1, -k2)];
        m = std::max(m, std::abs(c_[idx] - std::conj(mirror)));
    });
    return m;
}

bool SpectralScalar::finite() const {
    for (const auto& z : c_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

SpectralScalar& SpectralScalar::operator+=(const SpectralScalar& o) {
    if (grid_ != o.grid_) throw ShapeError("grid mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

SpectralScalar& SpectralScalar::operator-=(const SpectralScalar& o) {
    if (grid_ != o.grid_) throw ShapeError("grid mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

SpectralScalar& SpectralScalar::operator*=(double s) {
    for (auto& z : c_) z *= s;
    return *this;
}

double SpectralVector::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : comp_) m = std::max(m, c.max_abs_coeff());
    return m;
}

bool SpectralVector::finite() const {
    for (const auto& c : comp_)
        if (!c.finite()) return false;
    return true;
}

SpectralVector& SpectralVector::operator+=(const SpectralVector& o) {
    for (int i = 0; i < dim(); ++i) comp_[i] += o.comp_[i];
    return *this;
}

SpectralVector& SpectralVector::operator-=(const SpectralVector& o) {
    for (int i = 0; i < dim(); ++i) comp_[i] -= o.comp_[i];
    return *this;
}

SpectralVector& SpectralVector::operator*=(double s) {
    for (auto& c : comp_) c *= s;
    return *this;
}

}  // namespace mrelab
