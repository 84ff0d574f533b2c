#include "lrh/field.hpp"

#include "lrh/fft.hpp"

namespace lrh {

namespace {

// Parity of the sum of storage indices; carries the exp(+i xi_k L/2) phase of
// the centered grid, which equals (-1)^{sum k_i} for even N.
inline int index_parity(const GridSpec& g, std::size_t flat) {
    int p = 0;
    for (int a = 0; a < g.dim; ++a) {
        p ^= static_cast<int>(flat % g.points) & 1;
        flat /= g.points;
    }
    return p;
}

} // namespace

Field to_fourier(const Field& f) {
    if (f.space() == Space::spectral) return f;
    const GridSpec& g = f.grid();
    Field out(g, Space::spectral);
    fft::dft(g, f.values().data(), out.values().data(), -1);
    const double scale =
        std::pow(2.0 * pi, -0.5 * g.dim) * std::pow(g.spacing(), g.dim);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] *= index_parity(g, i) ? -scale : scale;
    return out;
}

Field from_fourier(const Field& f) {
    if (f.space() == Space::physical) return f;
    const GridSpec& g = f.grid();
    Field tmp(g, Space::spectral, f.values());
    for (std::size_t i = 0; i < tmp.size(); ++i)
        if (index_parity(g, i)) tmp[i] = -tmp[i];
    Field out(g, Space::physical);
    fft::dft(g, tmp.values().data(), out.values().data(), +1);
    const double scale = std::pow(2.0 * pi, -0.5 * g.dim) * std::pow(g.dk(), g.dim);
    for (auto& z : out.values()) z *= scale;
    return out;
}

Field in_space(const Field& f, Space s) {
    return s == Space::spectral ? to_fourier(f) : from_fourier(f);
}

Field pointwise(const Field& a, const Field& b) {
    Field pa = from_fourier(a), pb = from_fourier(b);
    Field out(pa.grid(), Space::physical);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = pa[i] * pb[i];
    return out;
}

Field abs_squared(const Field& a) {
    Field pa = from_fourier(a);
    Field out(pa.grid(), Space::physical);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::norm(pa[i]);
    return out;
}

Field conjugate(const Field& a) {
    Field out = a;
    for (auto& z : out.values()) z = std::conj(z);
    return out;
}

} // namespace lrh
