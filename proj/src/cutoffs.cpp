#include "lrh/cutoffs.hpp"

#include <cmath>

namespace lrh {

namespace {

inline double h(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }
inline double hp(double x) { return x > 0.0 ? std::exp(-1.0 / x) / (x * x) : 0.0; }

} // namespace

double chi_bump(double l) {
    if (l <= 1.0) return 1.0;
    if (l >= 2.0) return 0.0;
    double a = h(2.0 - l), b = h(l - 1.0);
    return a / (a + b);
}

double chi_bump_prime(double l) {
    if (l <= 1.0 || l >= 2.0) return 0.0;
    double a = h(2.0 - l), b = h(l - 1.0);
    double ap = -hp(2.0 - l), bp = hp(l - 1.0);
    double denom = (a + b) * (a + b);
    return (ap * b - a * bp) / denom;
}

double chi_tilde_profile(double l) { return 0.5 * l * chi_bump_prime(l); }

ChiCutoffs chi_cutoffs(double t) {
    if (!(t > 0.0)) throw DomainError("chi_cutoffs: t must be positive");
    const double rt = std::sqrt(t);
    ChiCutoffs c;
    c.low = RadialMultiplier{[rt](double k) { return cplx{chi_bump(k * rt), 0.0}; },
                             cplx{1.0, 0.0}};
    c.high = RadialMultiplier{[rt](double k) { return cplx{1.0 - chi_bump(k * rt), 0.0}; },
                              cplx{0.0, 0.0}};
    c.tilde = RadialMultiplier{[rt](double k) { return cplx{chi_tilde_profile(k * rt), 0.0}; },
                               cplx{0.0, 0.0}};
    return c;
}

} // namespace lrh
