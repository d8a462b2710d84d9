#include "mrelab/ops.hpp"

#include <cmath>

namespace mrelab {

SpectralScalar derivative(const SpectralScalar& s, int axis) {
    const Grid& g = s.grid();
    if (axis < 0 || axis >= g.dim()) throw DomainError("derivative axis out of range");
    SpectralScalar out(g);
    const int nyq = g.n(axis) / 2;
    g.for_each_mode([&](std::size_t idx, int k0, int k1, int k2) {
        const int k = axis == 0 ? k0 : (axis == 1 ? k1 : k2);
        out[idx] = k == nyq ? cdouble{0.0, 0.0} : cdouble{0.0, double(k)} * s[idx];
    });
    return out;
}

SpectralVector derivative(const SpectralVector& v, int axis) {
    SpectralVector out(v.grid());
    for (int i = 0; i < v.dim(); ++i) out[i] = derivative(v[i], axis);
    return out;
}

SpectralVector gradient(const SpectralScalar& s) {
    SpectralVector out(s.grid());
    for (int a = 0; a < s.grid().dim(); ++a) out[a] = derivative(s, a);
    return out;
}

SpectralScalar divergence(const SpectralVector& v) {
    SpectralScalar out = derivative(v[0], 0);
    for (int a = 1; a < v.dim(); ++a) out += derivative(v[a], a);
    return out;
}

SpectralScalar inv_fractional_laplacian(const SpectralScalar& s, double gamma) {
    if (gamma < 0.0) throw DomainError("gamma must be >= 0");
    const double mean_mag = std::abs(s[0]);
    if (mean_mag > 1e-12 * std::max(s.max_abs_coeff(), 1e-300))
        throw DomainError("inv_fractional_laplacian requires zero-mean input");
    SpectralScalar out = s;
    out[0] = 0.0;
    if (gamma == 0.0) return out;
    out.grid().for_each_mode([&](std::size_t idx, int k0, int k1, int k2) {
        const double k2sum = double(k0) * k0 + double(k1) * k1 + double(k2) * k2;
        if (k2sum > 0.0) out[idx] *= std::pow(k2sum, -gamma);
    });
    return out;
}

SpectralVector inv_fractional_laplacian(const SpectralVector& v, double gamma) {
    SpectralVector out(v.grid());
    for (int i = 0; i < v.dim(); ++i) out[i] = inv_fractional_laplacian(v[i], gamma);
    return out;
}

SpectralVector leray_project(const SpectralVector& v) {
    const Grid& g = v.grid();
    SpectralVector out = v;
    if (g.dim() == 2) {
        g.for_each_mode([&](std::size_t idx, int k0, int k1, int) {
            const double k2sum = double(k0) * k0 + double(k1) * k1;
            if (k2sum == 0.0) return;
            const cdouble kd = (double(k0) * v[0][idx] + double(k1) * v[1][idx]) / k2sum;
            out[0][idx] -= double(k0) * kd;
            out[1][idx] -= double(k1) * kd;
        });
    } else {
        g.for_each_mode([&](std::size_t idx, int k0, int k1, int k2) {
            const double k2sum = double(k0) * k0 + double(k1) * k1 + double(k2) * k2;
            if (k2sum == 0.0) return;
            const cdouble kd =
                (double(k0) * v[0][idx] + double(k1) * v[1][idx] + double(k2) * v[2][idx]) / k2sum;
            out[0][idx] -= double(k0) * kd;
            out[1][idx] -= double(k1) * kd;
            out[2][idx] -= double(k2) * kd;
        });
    }
    return out;
}

SpectralVector curl(const SpectralVector& v) {
    if (v.dim() != 3) throw DomainError("curl needs a 3D field");
    SpectralVector out(v.grid());
    out[0] = derivative(v[2], 1) - derivative(v[1], 2);
    out[1] = derivative(v[0], 2) - derivative(v[2], 0);
    out[2] = derivative(v[1], 0) - derivative(v[0], 1);
    return out;
}

SpectralScalar curl2d(const SpectralVector& v) {
    if (v.dim() != 2) throw DomainError("curl2d needs a 2D field");
    return derivative(v[1], 0) - derivative(v[0], 1);
}

SpectralVector vector_potential(const SpectralVector& B) {
    if (B.dim() != 3) throw DomainError("vector_potential needs a 3D field");
    for (int i = 0; i < 3; ++i)
        if (std::abs(B[i][0]) > 1e-12 * std::max(B.max_abs_coeff(), 1e-300))
            throw DomainError("vector_potential requires zero-mean input");
    SpectralVector j = curl(B);
    SpectralVector out(B.grid());
    for (int i = 0; i < 3; ++i) {
        j[i][0] = 0.0;
        out[i] = inv_fractional_laplacian(j[i], 1.0);
    }
    return out;
}

bool mode_kept(const Grid& g, int k0, int k1, int k2) {
    if (3 * std::abs(k0) > g.n(0)) return false;
    if (3 * std::abs(k1) > g.n(1)) return false;
    if (g.dim() == 3 && 3 * std::abs(k2) > g.n(2)) return false;
    return true;
}

void dealias_inplace(SpectralScalar& s) {
    const Grid& g = s.grid();
    g.for_each_mode([&](std::size_t idx, int k0, int k1, int k2) {
        if (!mode_kept(g, k0, k1, k2)) s[idx] = 0.0;
    });
}

SpectralScalar dealias(SpectralScalar s) {
    dealias_inplace(s);
    return s;
}

SpectralVector dealias(SpectralVector v) {
    for (int i = 0; i < v.dim(); ++i) dealias_inplace(v[i]);
    return v;
}

SpectralScalar dealiased_product(const SpectralScalar& a, const SpectralScalar& b) {
    if (a.grid() != b.grid()) throw ShapeError("grid mismatch in product");
    const auto ap = a.to_physical();
    return dealiased_product(ap, b);
}

SpectralScalar dealiased_product(std::span<const double> a_phys, const SpectralScalar& b) {
    if (a_phys.size() != b.grid().size()) throw ShapeError("sample count mismatch in product");
    auto bp = b.to_physical();
    for (std::size_t i = 0; i < bp.size(); ++i) bp[i] *= a_phys[i];
    return dealias(SpectralScalar::from_physical(b.grid(), bp));
}

double divergence_defect(const SpectralVector& v) {
    const double scale = v.max_abs_coeff();
    if (scale == 0.0) return 0.0;
    return divergence(v).max_abs_coeff() / scale;
}

void hermitian_symmetrize(SpectralScalar& s) {
    const Grid& g = s.grid();
    g.for_each_mode([&](std::size_t idx, int k0, int k1, int k2) {
        const std::size_t mirror = s.flat(-k0, -k1, -k2);
        if (mirror < idx) return;
        const cdouble avg = 0.5 * (s[idx] + std::conj(s[mirror]));
        s[idx] = avg;
        s[mirror] = std::conj(avg);
    });
}

void hermitian_symmetrize(SpectralVector& v) {
    for (int i = 0; i < v.dim(); ++i) hermitian_symmetrize(v[i]);
}

void spectral_floor(SpectralVector& v, double floor_abs) {
    if (floor_abs <= 0.0) return;
    for (int i = 0; i < v.dim(); ++i) {
        auto c = v[i].coeffs();
        for (std::size_t idx = 1; idx < c.size(); ++idx)
            if (std::abs(c[idx]) < floor_abs) c[idx] = 0.0;
        // idx 0 is k = (0,..,0); the mean is never floored.
    }
}

double mean_value(const SpectralScalar& s) { return s[0].real(); }

}  // namespace mrelab
