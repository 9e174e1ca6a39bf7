#include "gdno/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace gdno::fft {

namespace {

struct PlanPair {
    fftw_plan backward;  // coefficients -> physical (FFTW_BACKWARD, exp(+i k x))
    fftw_plan forward;   // physical -> coefficients (FFTW_FORWARD)
};

std::mutex plan_mutex;
std::map<std::pair<int, int>, PlanPair>& plan_cache() {
    static std::map<std::pair<int, int>, PlanPair> cache;
    return cache;
}

const PlanPair& plans_for(int Nx, int Ny) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find({Nx, Ny});
    if (it != cache.end()) return it->second;
    std::vector<cplx> buf(static_cast<size_t>(Nx) * Ny);
    auto* p = reinterpret_cast<fftw_complex*>(buf.data());
    // fftw uses row-major with the last dimension contiguous; our layout is
    // [iy][ix], so pass (n0,n1) = (Ny,Nx).
    PlanPair pp;
    pp.backward = fftw_plan_dft_2d(Ny, Nx, p, p, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    pp.forward = fftw_plan_dft_2d(Ny, Nx, p, p, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    return cache.emplace(std::make_pair(Nx, Ny), pp).first->second;
}

}  // namespace

std::vector<cplx> to_physical(const HGrid& g, const std::vector<cplx>& coeffs) {
    std::vector<cplx> out = coeffs;
    const PlanPair& pp = plans_for(g.Nx(), g.Ny());
    auto* p = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(pp.backward, p, p);
    return out;
}

std::vector<cplx> to_coefficients(const HGrid& g, const std::vector<cplx>& phys) {
    std::vector<cplx> out = phys;
    const PlanPair& pp = plans_for(g.Nx(), g.Ny());
    auto* p = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(pp.forward, p, p);
    double scale = 1.0 / (static_cast<double>(g.Nx()) * g.Ny());
    for (auto& v : out) v *= scale;
    return out;
}

}  // namespace gdno::fft
