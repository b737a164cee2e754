#include "holoca/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace holoca {

namespace {

// FFTW's planner is not thread-safe; plans are built once per (length,
// direction) under a lock and executed with the new-array interface.
class PlanCache {
public:
    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(n, sign);
        if (auto it = plans_.find(key); it != plans_.end()) return it->second;
        std::vector<Complex> in(n), out(n);
        auto plan = fftw_plan_dft_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(in.data()),
                                     reinterpret_cast<fftw_complex*>(out.data()), sign,
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
    static PlanCache cache;
    return cache;
}

std::vector<Complex> transform(std::span<const Complex> x, int sign) {
    std::vector<Complex> in(x.begin(), x.end());
    std::vector<Complex> out(x.size());
    if (x.empty()) return out;
    fftw_execute_dft(plan_cache().get(x.size(), sign), reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

} // namespace

std::vector<Complex> forward_dft(std::span<const Complex> x) {
    return transform(x, FFTW_FORWARD);
}

std::vector<Complex> inverse_dft(std::span<const Complex> spectrum) {
    auto out = transform(spectrum, FFTW_BACKWARD);
    const double scale = out.empty() ? 1.0 : 1.0 / static_cast<double>(out.size());
    for (auto& v : out) v *= scale;
    return out;
}

const char* fft_backend_version() { return fftw_version; }

} // namespace holoca
