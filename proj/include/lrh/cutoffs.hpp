#pragma once
#include "lrh/multipliers.hpp"

namespace lrh {

// Fixed C-infinity cutoff chi: chi(l) = 1 for l <= 1, 0 for l >= 2, joined by
// the normalized exp(-1/x) bridge, monotone on (1, 2).
double chi_bump(double l);
double chi_bump_prime(double l);
// chi~(l) = (1/2) l chi'(l); supported in 1 <= l <= 2.
double chi_tilde_profile(double l);

struct ChiCutoffs {
    RadialMultiplier low;     // chi(omega t^{1/2})
    RadialMultiplier high;    // 1 - chi(omega t^{1/2})
    RadialMultiplier tilde;   // chi~(omega t^{1/2})
};

// Time-dependent low/high frequency splitting at scale |xi| ~ t^{-1/2}.
ChiCutoffs chi_cutoffs(double t);

} // namespace lrh
