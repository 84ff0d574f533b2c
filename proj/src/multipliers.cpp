#include "lrh/multipliers.hpp"

#include <cmath>

namespace lrh {

Field apply_multiplier(const Field& f, const RadialMultiplier& m) {
    Field out = to_fourier(f);
    const GridSpec& g = out.grid();
    int idx[8];
    for (std::size_t i = 0; i < out.size(); ++i) {
        decode_index(g, i, idx);
        double k2 = xi_norm2(g, idx);
        out[i] *= (k2 == 0.0) ? m.zero_mode : m.profile(std::sqrt(k2));
    }
    return out;
}

RadialMultiplier omega_power(double sigma) {
    return RadialMultiplier{[sigma](double k) { return cplx{std::pow(k, sigma), 0.0}; },
                            cplx{0.0, 0.0}};
}

RadialMultiplier bracket_power(double sigma) {
    return RadialMultiplier{
        [sigma](double k) { return cplx{std::pow(1.0 + k * k, 0.5 * sigma), 0.0}; },
        cplx{1.0, 0.0}};
}

Field apply_omega_power(const Field& f, double sigma) {
    return apply_multiplier(f, omega_power(sigma));
}

std::vector<Field> gradient(const Field& f) {
    Field fh = to_fourier(f);
    const GridSpec& g = fh.grid();
    std::vector<Field> out;
    out.reserve(static_cast<std::size_t>(g.dim));
    int idx[8];
    for (int a = 0; a < g.dim; ++a) {
        Field comp = fh;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            decode_index(g, i, idx);
            comp[i] *= cplx{0.0, g.xi_at(idx[a])};
        }
        out.push_back(std::move(comp));
    }
    return out;
}

Field divergence(const std::vector<Field>& v) {
    if (v.empty()) throw ConfigError("divergence: empty vector field");
    const GridSpec& g = v.front().grid();
    Field out(g, Space::spectral);
    int idx[8];
    for (int a = 0; a < g.dim; ++a) {
        Field comp = to_fourier(v[static_cast<std::size_t>(a)]);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            decode_index(g, i, idx);
            out[i] += cplx{0.0, g.xi_at(idx[a])} * comp[i];
        }
    }
    return out;
}

Field laplacian(const Field& f) {
    Field out = to_fourier(f);
    const GridSpec& g = out.grid();
    int idx[8];
    for (std::size_t i = 0; i < out.size(); ++i) {
        decode_index(g, i, idx);
        out[i] *= -xi_norm2(g, idx);
    }
    return out;
}

Field dealias(const Field& f) {
    Field out = to_fourier(f);
    const GridSpec& g = out.grid();
    const double r2 = g.dealias_radius() * g.dealias_radius();
    int idx[8];
    for (std::size_t i = 0; i < out.size(); ++i) {
        decode_index(g, i, idx);
        if (xi_norm2(g, idx) >= r2) out[i] = 0.0;
    }
    return out;
}

Field multiply_dealiased(const Field& a, const Field& b) {
    return dealias(pointwise(a, b));
}

Field pad_spectrum(const Field& f, int factor) {
    Field fh = to_fourier(f);
    const GridSpec& g = fh.grid();
    GridSpec fine{g.dim, g.points * factor, g.box};
    Field out(fine, Space::spectral);
    int idx[8];
    for (std::size_t i = 0; i < fh.size(); ++i) {
        decode_index(g, i, idx);
        std::size_t j = 0;
        for (int a = 0; a < g.dim; ++a) {
            int k = g.signed_index(idx[a]);
            j = j * fine.points + static_cast<std::size_t>(k >= 0 ? k : k + fine.points);
        }
        out[j] = fh[i];
    }
    return out;
}

Field truncate_spectrum(const Field& f, const GridSpec& target) {
    Field fh = to_fourier(f);
    const GridSpec& g = fh.grid();
    if (std::abs(g.dk() - target.dk()) > 1e-12 * target.dk() || g.dim != target.dim)
        throw ConfigError("truncate_spectrum: incompatible frequency lattices");
    Field out(target, Space::spectral);
    int idx[8];
    for (std::size_t i = 0; i < out.size(); ++i) {
        decode_index(target, i, idx);
        std::size_t j = 0;
        for (int a = 0; a < g.dim; ++a) {
            int k = target.signed_index(idx[a]);
            j = j * g.points + static_cast<std::size_t>(k >= 0 ? k : k + g.points);
        }
        out[i] = fh[j];
    }
    return out;
}

Field exact_product(const Field& a, const Field& b) {
    Field pa = from_fourier(pad_spectrum(a));
    Field pb = from_fourier(pad_spectrum(b));
    Field out(pa.grid(), Space::physical);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = pa[i] * pb[i];
    return out;
}

double boundary_mass_fraction(const Field& f, double margin) {
    Field p = from_fourier(f);
    const GridSpec& g = p.grid();
    const double edge = 0.5 * g.box - margin;
    double near = 0.0, total = 0.0;
    int idx[8];
    for (std::size_t i = 0; i < p.size(); ++i) {
        decode_index(g, i, idx);
        double m = std::norm(p[i]);
        total += m;
        for (int a = 0; a < g.dim; ++a) {
            if (std::abs(g.x_at(idx[a])) > edge) {
                near += m;
                break;
            }
        }
    }
    return total > 0.0 ? near / total : 0.0;
}

} // namespace lrh
