#include "mrelab/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mrelab {

double energy(const SpectralVector& B) { return 0.5 * inner_l2(B, B); }

double dissipation(const SpectralVector& u, double gamma) {
    for (int i = 0; i < u.dim(); ++i)
        if (std::abs(u[i][0]) > 1e-12 * std::max(u.max_abs_coeff(), 1e-300))
            throw DomainError("dissipation requires zero-mean velocity");
    const double n = sobolev_norm(u, gamma);
    return n * n;
}

double helicity(const SpectralVector& B) {
    const SpectralVector A = vector_potential(B);  // checks dim and mean
    return inner_l2(A, B);
}

double cross_helicity(const SpectralVector& u, const SpectralVector& B) {
    return inner_l2(u, B);
}

DiagnosticsRecord record(const MreState& s, const std::vector<double>& hs) {
    DiagnosticsRecord r;
    r.t = s.t;
    r.energy = energy(s.B);
    const SpectralVector u = constitutive_velocity(s.B, s.gamma);
    r.dissipation = dissipation(u, s.gamma);
    if (s.B.grid().dim() == 3) {
        SpectralVector b0 = s.B;
        for (int i = 0; i < 3; ++i) b0[i][0] = 0.0;  // helicity of the mean-free part
        r.helicity = helicity(b0);
    }
    r.cross_helicity = cross_helicity(u, s.B);
    r.u_lip = linf_gradient(u);
    r.b_lip = linf_gradient(s.B);
    r.criterion = r.u_lip + r.b_lip * r.b_lip;
    if (s.B.grid().dim() == 3)
        r.current_l2 = l2_norm(curl(s.B));
    else
        r.current_l2 = l2_norm(curl2d(s.B));
    r.tail_fraction = tail_fraction(s.B);
    for (double sv : hs) r.hs_norms[sv] = sobolev_norm(s.B, sv);
    return r;
}

RunResult run(const MreState& s0, const IntegratorConfig& cfg, int sample_every,
              const std::vector<double>& hs) {
    std::vector<DiagnosticsRecord> records;
    try {
        MreState fin = advance(s0, cfg, sample_every,
                               [&](const MreState& s, long) { records.push_back(record(s, hs)); });
        return {std::move(fin), std::move(records)};
    } catch (const BlowupError& e) {
        throw BlowupWithTrajectory(e, std::move(records));
    }
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string hs_label(double s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

}  // namespace

std::string diagnostics_csv_header(const std::vector<double>& hs) {
    std::string h =
        "t,energy,dissipation,helicity,cross_helicity,u_lip,b_lip,criterion,current_l2,"
        "tail_fraction";
    for (double s : hs) h += ",hs_" + hs_label(s);
    return h;
}

std::string diagnostics_csv_row(const DiagnosticsRecord& r) {
    std::string row = format_double(r.t);
    row += "," + format_double(r.energy);
    row += "," + format_double(r.dissipation);
    row += ",";
    if (r.helicity) row += format_double(*r.helicity);  // empty field in 2D
    row += "," + format_double(r.cross_helicity);
    row += "," + format_double(r.u_lip);
    row += "," + format_double(r.b_lip);
    row += "," + format_double(r.criterion);
    row += "," + format_double(r.current_l2);
    row += "," + format_double(r.tail_fraction);
    for (const auto& [s, v] : r.hs_norms) {
        (void)s;
        row += "," + format_double(v);
    }
    return row;
}

void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRecord>& rows,
                           const std::vector<double>& hs) {
    std::ofstream f(path);
    if (!f) throw FormatError("cannot open CSV for writing: " + path);
    f << diagnostics_csv_header(hs) << "\n";
    for (const auto& r : rows) f << diagnostics_csv_row(r) << "\n";
    if (!f) throw FormatError("CSV write failed: " + path);
}

}  // namespace mrelab
