#pragma once
#include <cmath>
#include <random>

#include "lrh/field.hpp"
#include "lrh/multipliers.hpp"
#include "lrh/norms.hpp"

namespace th {

using namespace lrh;

inline double rel_err(const Field& a, const Field& b) {
    Field pa = from_fourier(a), pb = from_fourier(b);
    Field d = pa;
    d -= pb;
    double nb = l2_norm(pb);
    return nb > 0.0 ? l2_norm(d) / nb : l2_norm(d);
}

// exp(-|x-c|^2 / (2 w^2)) * exp(i k.x), amplitude amp
inline Field gaussian(const GridSpec& g, double w, double amp = 1.0,
                      const std::vector<double>& center = {},
                      const std::vector<double>& wavevec = {}) {
    Field f(g, Space::physical);
    int idx[8];
    for (std::size_t i = 0; i < f.size(); ++i) {
        decode_index(g, i, idx);
        double q = 0.0, ph = 0.0;
        for (int a = 0; a < g.dim; ++a) {
            double x = g.x_at(idx[a]);
            double c = center.empty() ? 0.0 : center[static_cast<std::size_t>(a)];
            q += (x - c) * (x - c);
            if (!wavevec.empty()) ph += wavevec[static_cast<std::size_t>(a)] * x;
        }
        f[i] = amp * std::exp(-0.5 * q / (w * w)) * std::exp(cplx{0.0, ph});
    }
    return f;
}

// single lattice mode exp(i xi_k . x) for integer index vector k
inline Field mode(const GridSpec& g, const std::vector<int>& k, cplx amp = {1.0, 0.0}) {
    Field f(g, Space::physical);
    int idx[8];
    for (std::size_t i = 0; i < f.size(); ++i) {
        decode_index(g, i, idx);
        double ph = 0.0;
        for (int a = 0; a < g.dim; ++a)
            ph += g.dk() * k[static_cast<std::size_t>(a)] * g.x_at(idx[a]);
        f[i] = amp * std::exp(cplx{0.0, ph});
    }
    return f;
}

// random field with Gaussian-decaying spectrum inside |xi| < band
inline Field random_band_limited(const GridSpec& g, std::uint64_t seed, double band) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Field f(g, Space::spectral);
    int idx[8];
    for (std::size_t i = 0; i < f.size(); ++i) {
        decode_index(g, i, idx);
        double k2 = xi_norm2(g, idx);
        double re = u(rng), im = u(rng);   // draw always, keep lattice-order pairing
        if (k2 == 0.0 || k2 >= band * band) continue;
        f[i] = cplx{re, im} * std::exp(-2.0 * k2 / (band * band));
    }
    return from_fourier(f);
}

} // namespace th
