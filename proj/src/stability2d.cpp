#include "mrelab/stability2d.hpp"

#include <cmath>
#include <sstream>

#include "mrelab/diagnostics.hpp"

namespace mrelab::stability2d {

namespace {

void require_2d(const Grid& g) {
    if (g.dim() != 2) throw DomainError("stability analysis is 2D only");
}

/// (-Laplacian)^{-1} with the mean removed first.
SpectralScalar inv_laplacian_zero_mean(SpectralScalar s) {
    s[0] = 0.0;
    return inv_fractional_laplacian(s, 1.0);
}

}  // namespace

SpectralScalar p0(const SpectralScalar& s) {
    SpectralScalar out = s;
    out.grid().for_each_mode([&](std::size_t idx, int k0, int, int) {
        if (k0 != 0) out[idx] = 0.0;
    });
    return out;
}

SpectralVector p0(const SpectralVector& v) {
    SpectralVector out(v.grid());
    for (int i = 0; i < v.dim(); ++i) out[i] = p0(v[i]);
    return out;
}

SpectralScalar pperp(const SpectralScalar& s) {
    SpectralScalar out = s;
    out.grid().for_each_mode([&](std::size_t idx, int k0, int, int) {
        if (k0 == 0) out[idx] = 0.0;
    });
    return out;
}

SpectralVector pperp(const SpectralVector& v) {
    SpectralVector out(v.grid());
    for (int i = 0; i < v.dim(); ++i) out[i] = pperp(v[i]);
    return out;
}

PerturbationDecomposition decompose(const SpectralVector& b) {
    require_2d(b.grid());
    PerturbationDecomposition d{p0(b[0]), pperp(b), 0.0};
    d.p0b2_residual = l2_norm(p0(b[1]));
    return d;
}

SpectralScalar pressure_linear(const SpectralScalar& a, const SpectralVector& f) {
    require_2d(f.grid());
    const SpectralScalar q = dealiased_product(derivative(a, 1), derivative(f[1], 0));
    return 2.0 * inv_laplacian_zero_mean(q);
}

SpectralScalar pressure_nonlinear(const SpectralVector& f) {
    require_2d(f.grid());
    const SpectralScalar d1f1 = derivative(f[0], 0);
    SpectralScalar q = dealiased_product(d1f1, d1f1);
    q += dealiased_product(derivative(f[1], 0), derivative(f[0], 1));
    return 2.0 * inv_laplacian_zero_mean(q);
}

SpectralVector linear_operator(const SpectralScalar& a, const SpectralVector& f) {
    require_2d(f.grid());
    const Grid& g = f.grid();

    auto one_plus_a = a.to_physical();
    for (auto& v : one_plus_a) v += 1.0;
    // (1+a)^2 via a nested pairwise product so the 2/3 mask stays alias-safe.
    SpectralScalar a1 = SpectralScalar::from_physical(g, one_plus_a);
    const SpectralScalar sq = dealiased_product(one_plus_a, a1);
    const auto sq_phys = sq.to_physical();

    const SpectralScalar pL = pressure_linear(a, f);
    const SpectralVector grad_d1pL = gradient(derivative(pL, 0));

    SpectralVector out(g);
    for (int i = 0; i < 2; ++i) {
        out[i] = dealiased_product(sq_phys, derivative(derivative(f[i], 0), 0));
        out[i] += dealiased_product(one_plus_a, grad_d1pL[i]);
    }
    out[0] -= dealiased_product(derivative(a, 1), derivative(pL, 1));
    return out;
}

SpectralVector w_velocity(const SpectralScalar& a, const SpectralVector& f) {
    require_2d(f.grid());
    const Grid& g = f.grid();
    const auto a_phys = a.to_physical();
    const auto d2a_phys = derivative(a, 1).to_physical();
    const auto f1 = f[0].to_physical();
    const auto f2 = f[1].to_physical();

    const SpectralScalar pL = pressure_linear(a, f);
    const SpectralScalar pN = pressure_nonlinear(f);

    SpectralVector out(g);
    for (int i = 0; i < 2; ++i) {
        // f.grad f_i + d_i p_N, oscillatory part only
        SpectralScalar adv = dealiased_product(f1, derivative(f[i], 0));
        adv += dealiased_product(f2, derivative(f[i], 1));
        adv += derivative(pN, i);
        out[i] = pperp(adv);
        out[i] += dealiased_product(a_phys, derivative(f[i], 0));
        out[i] += derivative(pL, i);
    }
    out[0] += dealiased_product(d2a_phys, f[1]);
    return out;
}

SpectralVector nonlinear_term(const SpectralScalar& a, const SpectralVector& f,
                              const SpectralVector& w) {
    require_2d(f.grid());
    const Grid& g = f.grid();
    const auto a_phys = a.to_physical();
    const auto d2a_phys = derivative(a, 1).to_physical();
    const auto f1 = f[0].to_physical();
    const auto f2 = f[1].to_physical();
    const auto w1 = w[0].to_physical();
    const auto w2 = w[1].to_physical();

    const SpectralScalar pN = pressure_nonlinear(f);
    const SpectralScalar p0f1f2 = p0(dealiased_product(f[0], f[1]));
    const auto d2p0_phys = derivative(p0f1f2, 1).to_physical();

    SpectralVector out(g);
    for (int i = 0; i < 2; ++i) {
        // a d1 Pperp(f.grad f_i + d_i p_N)
        SpectralScalar adv = dealiased_product(f1, derivative(f[i], 0));
        adv += dealiased_product(f2, derivative(f[i], 1));
        adv += derivative(pN, i);
        out[i] = dealiased_product(a_phys, derivative(pperp(adv), 0));
        // Pperp(f.grad w_i - w.grad f_i)
        SpectralScalar mix = dealiased_product(f1, derivative(w[i], 0));
        mix += dealiased_product(f2, derivative(w[i], 1));
        mix -= dealiased_product(w1, derivative(f[i], 0));
        mix -= dealiased_product(w2, derivative(f[i], 1));
        out[i] += pperp(mix);
        // -d2 P0(f1 f2) d1 f_i
        out[i] -= dealiased_product(d2p0_phys, derivative(f[i], 0));
        // 2 Pperp(f.grad d1 f_i)
        const SpectralScalar d1fi = derivative(f[i], 0);
        SpectralScalar adv1 = dealiased_product(f1, derivative(d1fi, 0));
        adv1 += dealiased_product(f2, derivative(d1fi, 1));
        out[i] += 2.0 * pperp(adv1);
        // grad d1 Pperp p_N
        out[i] += derivative(derivative(pperp(pN), 0), i);
    }
    // e1 terms: d2^2 P0(f1 f2) f2 - d2a Pperp(f.grad f2 + d2 p_N)
    out[0] += dealiased_product(derivative(derivative(p0f1f2, 1), 1).to_physical(), f[1]);
    SpectralScalar adv2 = dealiased_product(f1, derivative(f[1], 0));
    adv2 += dealiased_product(f2, derivative(f[1], 1));
    adv2 += derivative(pN, 1);
    out[0] -= dealiased_product(d2a_phys, pperp(adv2));
    return out;
}

SpectralScalar a_rhs(const SpectralVector& f, const SpectralVector& w) {
    require_2d(f.grid());
    SpectralScalar s = 2.0 * dealiased_product(f[1], derivative(f[0], 0));
    s += dealiased_product(f[1], w[0]);
    s -= dealiased_product(w[1], f[0]);
    return derivative(p0(s), 1);
}

double fit_log_slope(const std::vector<double>& t, const std::vector<double>& y) {
    double st = 0, sl = 0, stt = 0, stl = 0;
    int n = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!(y[i] > 0.0)) continue;
        const double l = std::log(y[i]);
        st += t[i];
        sl += l;
        stt += t[i] * t[i];
        stl += t[i] * l;
        ++n;
    }
    if (n < 2) throw DomainError("fit_log_slope needs at least two positive samples");
    const double denom = n * stt - st * st;
    if (denom == 0.0) throw DomainError("fit_log_slope: degenerate sample times");
    return (n * stl - st * sl) / denom;
}

DecayReport linear_semigroup_run(const SpectralScalar& a_frozen, const SpectralVector& f0,
                                 double t_end, double dt, int k, double delta,
                                 int sample_every) {
    require_2d(f0.grid());
    if (dt <= 0.0 || t_end < 0.0) throw DomainError("semigroup run: bad time parameters");
    DecayReport rep;
    rep.required_rate = -(1.0 - delta);
    SpectralVector f = dealias(pperp(f0));
    double t = 0.0;
    rep.samples.push_back({t, sobolev_norm(f, k)});
    long i = 0;
    while (t < t_end - 1e-14 * std::max(1.0, t_end)) {
        const double h = std::min(dt, t_end - t);
        const SpectralVector k1 = linear_operator(a_frozen, f);
        const SpectralVector k2 = linear_operator(a_frozen, f + (0.5 * h) * k1);
        const SpectralVector k3 = linear_operator(a_frozen, f + (0.5 * h) * k2);
        const SpectralVector k4 = linear_operator(a_frozen, f + h * k3);
        f += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!f.finite()) throw BlowupError(MreState{f, t, 0.0});
        t += h;
        ++i;
        if (i % sample_every == 0 || t >= t_end - 1e-14 * std::max(1.0, t_end))
            rep.samples.push_back({t, sobolev_norm(f, k)});
    }
    std::vector<double> ts, ys;
    for (const auto& s : rep.samples) {
        ts.push_back(s.t);
        ys.push_back(s.f_hk);
    }
    rep.fitted_rate = fit_log_slope(ts, ys);
    rep.ok = rep.fitted_rate <= rep.required_rate;
    return rep;
}

BoundReport nonlinear_stability_experiment(const StabilityParams& p, const SpectralVector& b0,
                                           double t_end, int sample_every) {
    require_2d(b0.grid());
    if (p.m < p.k + 9) throw DomainError("stability params need m >= k + 9");
    if (p.delta <= 0.0 || p.delta >= 1.0) throw DomainError("delta must lie in (0,1)");
    {
        const auto d0 = decompose(b0);
        const double scale = std::max(b0.max_abs_coeff(), 1e-300);
        if (l2_norm(p0(b0[0])) + d0.p0b2_residual > 1e-10 * scale)
            throw DomainError("stability experiment needs P0 b0 = 0");
    }

    MreState state{b0, 0.0, 0.0};
    state.B[0][0] += 1.0;  // B = e1 + b

    IntegratorConfig cfg;
    cfg.t_end = t_end;
    cfg.spectral_floor = 1e-9 * b0.max_abs_coeff();

    BoundReport rep;
    rep.floor_used = cfg.spectral_floor;
    rep.all_ok = true;
    const double rate = 1.0 - p.delta;
    advance(state, cfg, sample_every, [&](const MreState& s, long) {
        SpectralVector b = s.B;
        b[0][0] -= 1.0;
        const auto dec = decompose(b);
        BoundSample bs;
        bs.t = s.t;
        bs.f_hk = sobolev_norm(dec.f, p.k);
        bs.bound_f = 4.0 * p.eps * std::exp(-rate * s.t);
        bs.a_hk2 = sobolev_norm_inhom(dec.a, p.k + 2);
        bs.bound_a = 4.0 * p.eps;
        const double bm = sobolev_norm(b, p.m);
        bs.b_hm2 = bm * bm;
        bs.bound_b = 4.0 * p.eps * std::exp(p.eps * s.t);
        bs.b_l2 = l2_norm(b);
        bs.ok = bs.f_hk <= bs.bound_f && bs.a_hk2 <= bs.bound_a && bs.b_hm2 <= bs.bound_b &&
                bs.b_l2 <= p.eps;
        rep.all_ok = rep.all_ok && bs.ok;
        rep.samples.push_back(bs);
    });
    return rep;
}

std::string bound_report_csv(const BoundReport& r) {
    std::ostringstream os;
    os << "t,f_hk,bound_f,a_hk2,bound_a,b_hm,bound_b,ok\n";
    for (const auto& s : r.samples) {
        os << format_double(s.t) << "," << format_double(s.f_hk) << ","
           << format_double(s.bound_f) << "," << format_double(s.a_hk2) << ","
           << format_double(s.bound_a) << "," << format_double(s.b_hm2) << ","
           << format_double(s.bound_b) << "," << (s.ok ? 1 : 0) << "\n";
    }
    return os.str();
}

}  // namespace mrelab::stability2d
