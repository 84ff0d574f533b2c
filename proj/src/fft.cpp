#include "lrh/fft.hpp"

#include <fftw3.h>

#include <map>
#include <vector>

namespace lrh::fft {

namespace {

struct PlanKey {
    std::vector<int> dims;
    int sign;
    bool operator<(const PlanKey& o) const {
        if (sign != o.sign) return sign < o.sign;
        return dims < o.dims;
    }
};

fftw_plan make_plan(const std::vector<int>& dims, int sign) {
    std::size_t total = 1;
    for (int d : dims) total *= static_cast<std::size_t>(d);
    fftw_complex* buf = fftw_alloc_complex(total);
    // FFTW_UNALIGNED lets the plan run on any caller array via new-array execute.
    fftw_plan p = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), buf, buf,
                                sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    return p;
}

fftw_plan plan_for(const GridSpec& g, int sign) {
    static std::map<PlanKey, fftw_plan> cache;
    PlanKey key{std::vector<int>(static_cast<std::size_t>(g.dim), g.points), sign};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_plan(key.dims, sign)).first;
    return it->second;
}

} // namespace

void dft(const GridSpec& g, const cplx* in, cplx* out, int sign) {
    fftw_plan p = plan_for(g, sign);
    fftw_execute_dft(p,
                     reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

} // namespace lrh::fft
