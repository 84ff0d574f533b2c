#include "lrh/norms.hpp"

#include <cmath>

namespace lrh {

double lebesgue_norm(const Field& f, double r) {
    if (r < 1.0) throw DomainError("lebesgue_norm: r must be >= 1");
    Field p = from_fourier(f);
    if (r == r_infinity) {
        double m = 0.0;
        for (const auto& z : p.values()) m = std::max(m, std::abs(z));
        return m;
    }
    const double w = std::pow(p.grid().spacing(), p.grid().dim);
    double s = 0.0;
    for (const auto& z : p.values()) s += std::pow(std::abs(z), r);
    return std::pow(w * s, 1.0 / r);
}

double sobolev_norm(const Field& f, double sigma, bool homogeneous) {
    Field fh = to_fourier(f);
    const GridSpec& g = fh.grid();
    const double w = std::pow(g.dk(), g.dim);
    double s = 0.0;
    int idx[8];
    for (std::size_t i = 0; i < fh.size(); ++i) {
        decode_index(g, i, idx);
        double k2 = xi_norm2(g, idx);
        double weight;
        if (homogeneous)
            weight = (k2 == 0.0) ? 0.0 : std::pow(k2, sigma);   // zero-mode policy
        else
            weight = std::pow(1.0 + k2, sigma);
        s += weight * std::norm(fh[i]);
    }
    return std::sqrt(w * s);
}

double l2_norm(const Field& f) {
    const GridSpec& g = f.grid();
    const double w = (f.space() == Space::physical)
                         ? std::pow(g.spacing(), g.dim)
                         : std::pow(g.dk(), g.dim);
    double s = 0.0;
    for (const auto& z : f.values()) s += std::norm(z);
    return std::sqrt(w * s);
}

double pm_norm(const Field& f, double sigma, double eps) {
    Field fh = to_fourier(f);
    return std::sqrt(sobolev_norm(fh, sigma + eps, true) *
                     sobolev_norm(fh, sigma - eps, true));
}

cplx inner(const Field& f, const Field& g) {
    if (!(f.grid() == g.grid())) throw ConfigError("inner: grid mismatch");
    Field a = f, b = g;
    if (a.space() != b.space()) {
        a = to_fourier(a);
        b = to_fourier(b);
    }
    const GridSpec& gr = a.grid();
    const double w = (a.space() == Space::physical)
                         ? std::pow(gr.spacing(), gr.dim)
                         : std::pow(gr.dk(), gr.dim);
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return w * s;
}

} // namespace lrh
