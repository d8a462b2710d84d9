#include "mrelab/mre.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <vector>

#include "mrelab/norms.hpp"

namespace mrelab {

SpectralVector constitutive_velocity(const SpectralVector& B, double gamma) {
    const Grid& g = B.grid();
    const int d = g.dim();
    std::vector<std::vector<double>> Bp(d);
    for (int i = 0; i < d; ++i) Bp[i] = B[i].to_physical();

    // div(B (x) B), with each product dealiased before differentiation.
    std::vector<std::vector<SpectralScalar>> BB(d, std::vector<SpectralScalar>(d, SpectralScalar(g)));
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            auto prod = Bp[i];
            for (std::size_t p = 0; p < prod.size(); ++p) prod[p] *= Bp[j][p];
            BB[i][j] = dealias(SpectralScalar::from_physical(g, prod));
            if (j != i) BB[j][i] = BB[i][j];
        }
    SpectralVector w(g);
    for (int i = 0; i < d; ++i) {
        SpectralScalar acc = derivative(BB[i][0], 0);
        for (int j = 1; j < d; ++j) acc += derivative(BB[i][j], j);
        w[i] = std::move(acc);
    }
    return inv_fractional_laplacian(leray_project(w), gamma);
}

SpectralVector induction_rhs(const SpectralVector& B, const SpectralVector& u) {
    const Grid& g = B.grid();
    if (u.grid() != g) throw ShapeError("induction_rhs: grid mismatch");
    const int d = g.dim();
    std::vector<std::vector<double>> Bp(d), up(d);
    for (int i = 0; i < d; ++i) {
        Bp[i] = B[i].to_physical();
        up[i] = u[i].to_physical();
    }
    SpectralVector out(g);
    std::vector<double> acc(g.size());
    for (int i = 0; i < d; ++i) {
        std::fill(acc.begin(), acc.end(), 0.0);
        for (int j = 0; j < d; ++j) {
            const auto dui = derivative(u[i], j).to_physical();
            const auto dBi = derivative(B[i], j).to_physical();
            for (std::size_t p = 0; p < acc.size(); ++p)
                acc[p] += Bp[j][p] * dui[p] - up[j][p] * dBi[p];
        }
        out[i] = dealias(SpectralScalar::from_physical(g, acc));
        out[i][0] = 0.0;  // transport conserves the mean exactly
    }
    return out;
}

namespace {

SpectralVector rhs(const SpectralVector& B, double gamma) {
    return induction_rhs(B, constitutive_velocity(B, gamma));
}

}  // namespace

double auto_dt(const MreState& s, const IntegratorConfig& cfg) {
    const double h = s.B.grid().min_spacing();
    const SpectralVector u = constitutive_velocity(s.B, s.gamma);
    double dt = cfg.cfl * h / std::max(1.0, linf_norm(u));
    if (s.gamma == 0.0) {
        const double binf = linf_norm(s.B);
        dt = std::min(dt, cfg.cfl * h * h / (2.0 * std::max(1.0, binf * binf)));
    }
    return dt;
}

MreState step(const MreState& s, const IntegratorConfig& cfg, long step_index) {
    double dt = cfg.dt ? *cfg.dt : auto_dt(s, cfg);
    if (cfg.t_end > s.t) dt = std::min(dt, cfg.t_end - s.t);
    if (dt <= 0.0) throw DomainError("step: dt must be positive");

    const SpectralVector k1 = rhs(s.B, s.gamma);
    const SpectralVector k2 = rhs(s.B + (0.5 * dt) * k1, s.gamma);
    const SpectralVector k3 = rhs(s.B + (0.5 * dt) * k2, s.gamma);
    const SpectralVector k4 = rhs(s.B + dt * k3, s.gamma);

    MreState out{s.B, s.t + dt, s.gamma};
    out.B += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!out.B.finite()) throw BlowupError(s);

    if (cfg.reproject_every >= 1 && (step_index + 1) % cfg.reproject_every == 0) {
        out.B = leray_project(out.B);
        hermitian_symmetrize(out.B);
        spectral_floor(out.B, cfg.spectral_floor);
    }
    return out;
}

MreState advance(MreState s, const IntegratorConfig& cfg, int sample_every,
                 const std::function<void(const MreState&, long)>& observer) {
    if (sample_every < 1) sample_every = 1;
    long i = 0;
    if (observer) observer(s, i);
    while (s.t < cfg.t_end - 1e-14 * std::max(1.0, cfg.t_end)) {
        s = step(s, cfg, i);
        ++i;
        const bool last = s.t >= cfg.t_end - 1e-14 * std::max(1.0, cfg.t_end);
        if (observer && (i % sample_every == 0 || last)) observer(s, i);
    }
    return s;
}

namespace {

template <class T>
void put(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& is) {
    T v;
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw FormatError("checkpoint: truncated file");
    return v;
}

}  // namespace

void write_checkpoint(std::ostream& os, const MreState& s) {
    os.write("MRE1", 4);
    const Grid& g = s.B.grid();
    put<std::uint32_t>(os, g.dim());
    for (int a = 0; a < g.dim(); ++a) put<std::uint32_t>(os, g.n(a));
    put<double>(os, s.gamma);
    put<double>(os, s.t);
    for (int i = 0; i < g.dim(); ++i)
        for (const auto& z : s.B[i].coeffs()) {
            put<double>(os, z.real());
            put<double>(os, z.imag());
        }
}

void write_checkpoint_file(const std::string& path, const MreState& s) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot open checkpoint file for writing: " + path);
    write_checkpoint(f, s);
    if (!f) throw FormatError("checkpoint write failed: " + path);
}

MreState read_checkpoint(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "MRE1", 4) != 0)
        throw FormatError("checkpoint: bad magic bytes");
    const auto dim = get<std::uint32_t>(is);
    if (dim != 2 && dim != 3) throw FormatError("checkpoint: invalid dimension");
    std::array<int, 3> n{1, 1, 1};
    for (std::uint32_t a = 0; a < dim; ++a) {
        n[a] = static_cast<int>(get<std::uint32_t>(is));
        if (n[a] < 8 || n[a] % 2 != 0) throw FormatError("checkpoint: invalid resolution");
    }
    const double gamma = get<double>(is);
    const double t = get<double>(is);
    Grid g(static_cast<int>(dim), n);
    MreState s{SpectralVector(g), t, gamma};
    for (std::uint32_t i = 0; i < dim; ++i)
        for (auto& z : s.B[int(i)].coeffs()) {
            const double re = get<double>(is);
            const double im = get<double>(is);
            z = {re, im};
        }
    is.peek();
    if (!is.eof()) throw FormatError("checkpoint: trailing bytes");
    return s;
}

MreState read_checkpoint_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot open checkpoint file: " + path);
    return read_checkpoint(f);
}

}  // namespace mrelab
