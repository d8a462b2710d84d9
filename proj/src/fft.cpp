#include "mrelab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace mrelab::fft {

namespace {

struct PlanCache {
    std::mutex mu;
    std::map<std::tuple<int, int, int, int, int>, fftw_plan> plans;

    fftw_plan get(const Grid& g, int sign) {
        const auto key = std::make_tuple(g.dim(), g.n(0), g.n(1), g.dim() == 3 ? g.n(2) : 1, sign);
        std::lock_guard<std::mutex> lock(mu);
        auto it = plans.find(key);
        if (it != plans.end()) return it->second;
        // FFTW_UNALIGNED lets the plan run on any caller buffer.
        std::vector<std::complex<double>> scratch(g.size());
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan p;
        if (g.dim() == 2)
            p = fftw_plan_dft_2d(g.n(0), g.n(1), buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        else
            p = fftw_plan_dft_3d(g.n(0), g.n(1), g.n(2), buf, buf, sign,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans.emplace(key, p);
        return p;
    }
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

}  // namespace

void forward_raw(const Grid& g, const std::complex<double>* in, std::complex<double>* out) {
    fftw_plan p = cache().get(g, FFTW_FORWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

void backward_raw(const Grid& g, const std::complex<double>* in, std::complex<double>* out) {
    fftw_plan p = cache().get(g, FFTW_BACKWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

}  // namespace mrelab::fft
