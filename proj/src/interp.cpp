#include "lrh/interp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lrh {

Field dilate_sample(const Field& f, const GridSpec& target, double alpha) {
    const GridSpec& g = f.grid();
    if (target.dim != g.dim) throw ConfigError("dilate_sample: dimension mismatch");
    const double reach = std::abs(alpha) * 0.5 * target.box;
    if (reach > 0.5 * g.box * (1.0 + 1e-12))
        throw ResolutionError("dilate_sample: rescaled points leave the source box");

    Field fh = to_fourier(f);
    const int n = g.dim;
    const int N = g.points;
    const int Nt = target.points;

    // per-axis evaluation matrix E[k*Nt + m] = exp(i xi_k alpha y_m)
    std::vector<cplx> E(static_cast<std::size_t>(N) * Nt);
    for (int k = 0; k < N; ++k) {
        double xi = g.xi_at(k);
        for (int m = 0; m < Nt; ++m)
            E[static_cast<std::size_t>(k) * Nt + m] =
                std::exp(cplx{0.0, xi * alpha * target.x_at(m)});
    }

    std::vector<cplx> work = fh.values();
    std::vector<int> shape(static_cast<std::size_t>(n), N);
    for (int a = 0; a < n; ++a) {
        std::size_t outer = 1, inner = 1;
        for (int b = 0; b < a; ++b) outer *= static_cast<std::size_t>(shape[b]);
        for (int b = a + 1; b < n; ++b) inner *= static_cast<std::size_t>(shape[b]);
        const int Ka = shape[a];
        std::vector<cplx> next(outer * static_cast<std::size_t>(Nt) * inner, cplx{0, 0});
        for (std::size_t o = 0; o < outer; ++o)
            for (int k = 0; k < Ka; ++k) {
                const cplx* src = work.data() + (o * Ka + k) * inner;
                const cplx* row = E.data() + static_cast<std::size_t>(k) * Nt;
                for (int m = 0; m < Nt; ++m) {
                    cplx w = row[m];
                    cplx* dst = next.data() + (o * Nt + m) * inner;
                    for (std::size_t i = 0; i < inner; ++i) dst[i] += w * src[i];
                }
            }
        work = std::move(next);
        shape[a] = Nt;
    }

    const double scale = std::pow(2.0 * pi, -0.5 * n) * std::pow(g.dk(), n);
    for (auto& z : work) z *= scale;
    return Field(target, Space::physical, std::move(work));
}

double effective_radius(const Field& f, double tail) {
    Field p = from_fourier(f);
    const GridSpec& g = p.grid();
    std::vector<std::pair<double, double>> rm(p.size());   // (sup radius, mass)
    int idx[8];
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        decode_index(g, i, idx);
        double r = 0.0;
        for (int a = 0; a < g.dim; ++a) r = std::max(r, std::abs(g.x_at(idx[a])));
        double m = std::norm(p[i]);
        rm[i] = {r, m};
        total += m;
    }
    if (total == 0.0) return 0.0;
    std::sort(rm.begin(), rm.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    double acc = 0.0;
    for (const auto& [r, m] : rm) {
        acc += m;
        if (acc > tail * total) return r;
    }
    return 0.0;
}

} // namespace lrh
