#include "stokes2p/fft.hpp"

#include <fftw3.h>

#include <map>
#include <tuple>

namespace stokes2p::fft {

namespace {

// FFTW plans keyed by (n, count, stride, dist, direction). Plans created with
// FFTW_ESTIMATE do not overwrite the buffer during planning, and the guru
// "new array" execute keeps one cached plan usable for any aligned buffer.
struct PlanCache {
    std::map<std::tuple<int, int, int, int, int>, fftw_plan> plans;

    fftw_plan get(int n, int count, int stride, int dist, int dir) {
        auto key = std::make_tuple(n, count, stride, dist, dir);
        auto it = plans.find(key);
        if (it != plans.end()) return it->second;
        std::vector<cd> dummy(static_cast<size_t>(dist) * (count - 1) +
                              static_cast<size_t>(stride) * (n - 1) + 1);
        auto* buf = reinterpret_cast<fftw_complex*>(dummy.data());
        fftw_plan p = fftw_plan_many_dft(1, &n, count, buf, nullptr, stride, dist, buf,
                                         nullptr, stride, dist, dir, FFTW_ESTIMATE);
        plans.emplace(key, p);
        return p;
    }
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

void execute(cd* data, int n, int count, int stride, int dist, int dir) {
    fftw_plan p = cache().get(n, count, stride, dist, dir);
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p, buf, buf);
    if (dir == FFTW_FORWARD) {
        const double inv = 1.0 / n;
        for (int l = 0; l < count; ++l)
            for (int j = 0; j < n; ++j) data[static_cast<size_t>(l) * dist + static_cast<size_t>(j) * stride] *= inv;
    }
}

} // namespace

void forward(cd* data, int n) { execute(data, n, 1, 1, 0, FFTW_FORWARD); }
void backward(cd* data, int n) { execute(data, n, 1, 1, 0, FFTW_BACKWARD); }

void forward_many(cd* data, int n, int count, int stride, int dist) {
    execute(data, n, count, stride, dist, FFTW_FORWARD);
}
void backward_many(cd* data, int n, int count, int stride, int dist) {
    execute(data, n, count, stride, dist, FFTW_BACKWARD);
}

} // namespace stokes2p::fft
