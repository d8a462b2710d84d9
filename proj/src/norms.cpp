#include "mrelab/norms.hpp"

#include <cmath>

#include "mrelab/ops.hpp"

namespace mrelab {

namespace {

double measure(const Grid& g) {
    double m = 1.0;
    for (int a = 0; a < g.dim(); ++a) m *= two_pi;
    return m;
}

}  // namespace

double inner_l2(const SpectralScalar& f, const SpectralScalar& g) {
    if (f.grid() != g.grid()) throw ShapeError("grid mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < f.grid().size(); ++i)
        acc += (f[i] * std::conj(g[i])).real();
    return measure(f.grid()) * acc;
}

double inner_l2(const SpectralVector& f, const SpectralVector& g) {
    double acc = 0.0;
    for (int i = 0; i < f.dim(); ++i) acc += inner_l2(f[i], g[i]);
    return acc;
}

double l2_norm(const SpectralScalar& f) { return std::sqrt(std::max(0.0, inner_l2(f, f))); }
double l2_norm(const SpectralVector& f) { return std::sqrt(std::max(0.0, inner_l2(f, f))); }

namespace {

double sobolev_sq(const SpectralScalar& f, double s) {
    double acc = 0.0;
    f.grid().for_each_mode([&](std::size_t idx, int k0, int k1, int k2) {
        const double k2sum = double(k0) * k0 + double(k1) * k1 + double(k2) * k2;
        if (k2sum == 0.0) return;
        acc += std::pow(k2sum, s) * std::norm(f[idx]);
    });
    return measure(f.grid()) * acc;
}

}  // namespace

double sobolev_norm(const SpectralScalar& f, double s) { return std::sqrt(sobolev_sq(f, s)); }

double sobolev_norm(const SpectralVector& f, double s) {
    double acc = 0.0;
    for (int i = 0; i < f.dim(); ++i) acc += sobolev_sq(f[i], s);
    return std::sqrt(acc);
}

double sobolev_norm_inhom(const SpectralScalar& f, double s) {
    return std::sqrt(sobolev_sq(f, s) + measure(f.grid()) * std::norm(f[0]));
}

double sobolev_norm_inhom(const SpectralVector& f, double s) {
    double acc = 0.0;
    for (int i = 0; i < f.dim(); ++i)
        acc += sobolev_sq(f[i], s) + measure(f.grid()) * std::norm(f[i][0]);
    return std::sqrt(acc);
}

double linf_norm(const SpectralScalar& f) {
    double m = 0.0;
    for (double v : f.to_physical()) m = std::max(m, std::abs(v));
    return m;
}

double linf_norm(const SpectralVector& f) {
    std::vector<std::vector<double>> phys;
    for (int i = 0; i < f.dim(); ++i) phys.push_back(f[i].to_physical());
    double m = 0.0;
    for (std::size_t p = 0; p < f.grid().size(); ++p) {
        double sq = 0.0;
        for (int i = 0; i < f.dim(); ++i) sq += phys[i][p] * phys[i][p];
        m = std::max(m, sq);
    }
    return std::sqrt(m);
}

double linf_gradient(const SpectralScalar& f) {
    SpectralVector g(f.grid());
    for (int a = 0; a < f.grid().dim(); ++a) g[a] = derivative(f, a);
    return linf_norm(g);
}

double linf_gradient(const SpectralVector& f) {
    // Frobenius norm of the full Jacobian, evaluated on the collocation grid.
    const int d = f.dim();
    std::vector<std::vector<double>> parts;
    for (int i = 0; i < d; ++i)
        for (int a = 0; a < d; ++a) parts.push_back(derivative(f[i], a).to_physical());
    double m = 0.0;
    for (std::size_t p = 0; p < f.grid().size(); ++p) {
        double sq = 0.0;
        for (const auto& part : parts) sq += part[p] * part[p];
        m = std::max(m, sq);
    }
    return std::sqrt(m);
}

double tail_fraction(const SpectralVector& f) {
    const Grid& g = f.grid();
    double total = 0.0, tail = 0.0;
    for (int i = 0; i < f.dim(); ++i) {
        g.for_each_mode([&](std::size_t idx, int k0, int k1, int k2) {
            if (k0 == 0 && k1 == 0 && k2 == 0) return;
            const double e = std::norm(f[i][idx]);
            total += e;
            const bool outer = 9 * std::abs(k0) > 2 * g.n(0) || 9 * std::abs(k1) > 2 * g.n(1) ||
                               (g.dim() == 3 && 9 * std::abs(k2) > 2 * g.n(2));
            if (outer) tail += e;
        });
    }
    return total > 0.0 ? tail / total : 0.0;
}

}  // namespace mrelab
