#include "lrh/dyadic.hpp"

#include <cmath>

#include "lrh/cutoffs.hpp"

namespace lrh {

double psi_hat(int j, double k) { return chi_bump(std::ldexp(k, -j)); }
double phi_hat(int j, double k) { return psi_hat(j, k) - psi_hat(j - 1, k); }

std::pair<int, int> dyadic_shell_range(const GridSpec& g) {
    const double k_lo = g.dk();
    const double k_hi = std::sqrt(static_cast<double>(g.dim)) * g.kmax_axis();
    // phi_j^ is supported in (2^{j-1}, 2^{j+1})
    int j_min = static_cast<int>(std::floor(std::log2(k_lo))); // 2^{j_min+1} > k_lo
    while (std::exp2(j_min + 1) <= k_lo) ++j_min;
    int j_max = static_cast<int>(std::ceil(std::log2(k_hi)));
    while (std::exp2(j_max - 1) >= k_hi) --j_max;
    return {j_min, j_max};
}

DyadicDecomposition dyadic_decompose(const Field& u, int nu) {
    const GridSpec& g = u.grid();
    auto [j_min, j_max] = dyadic_shell_range(g);
    if (j_max - j_min + 1 < 4)
        throw ConfigError("dyadic_decompose: grid resolves fewer than 4 dyadic shells");
    if (nu < 1) throw ConfigError("dyadic_decompose: nu must be >= 1");

    DyadicDecomposition d;
    d.j_min = j_min;
    d.j_max = j_max;
    d.nu = nu;
    Field uh = to_fourier(u);
    for (int j = j_min; j <= j_max; ++j) {
        RadialMultiplier mj{[j](double k) { return cplx{phi_hat(j, k), 0.0}; },
                            cplx{0.0, 0.0}};
        d.blocks.push_back({j, apply_multiplier(uh, mj)});
        RadialMultiplier sj{[j](double k) { return cplx{psi_hat(j, k), 0.0}; },
                            cplx{1.0, 0.0}};
        d.smoothing.push_back({j, apply_multiplier(uh, sj)});
    }
    RadialMultiplier rest{[j = j_min - 1](double k) { return cplx{psi_hat(j, k), 0.0}; },
                          cplx{1.0, 0.0}};
    d.low_rest = apply_multiplier(uh, rest);
    return d;
}

Field DyadicDecomposition::reconstruct() const {
    Field acc = low_rest;
    for (const auto& b : blocks) acc += b.block;
    return acc;
}

Field DyadicDecomposition::tilde_block(int j) const {
    Field acc(low_rest.grid(), Space::spectral);
    for (const auto& b : blocks)
        if (std::abs(b.j - j) <= nu) acc += b.block;
    return acc;
}

double besov_norm(const Field& u, double sigma, double r, double q) {
    auto [j_lo, j_hi] = dyadic_shell_range(u.grid());
    return besov_norm(u, sigma, r, q, j_lo, j_hi);
}

double besov_norm(const Field& u, double sigma, double r, double q, int j_lo, int j_hi) {
    DyadicDecomposition d = dyadic_decompose(u);
    double acc = 0.0;
    for (const auto& b : d.blocks) {
        if (b.j < j_lo || b.j > j_hi) continue;
        double term = std::exp2(b.j * sigma) * lebesgue_norm(b.block, r);
        if (q == r_infinity)
            acc = std::max(acc, term);
        else
            acc += std::pow(term, q);
    }
    return q == r_infinity ? acc : std::pow(acc, 1.0 / q);
}

} // namespace lrh
