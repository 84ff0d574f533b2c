#pragma once
#include "lrh/field.hpp"

namespace lrh {

// Per-mode factors of U_eta(t): exp(-i t |xi|^2 / 2 - eta t |xi|^2 / 2).
// Unimodular when eta = 0; a contraction semigroup (t >= 0 only) when eta > 0.
struct PropagatorCache {
    GridSpec grid;
    double t = 0.0;
    double eta = 0.0;
    std::vector<cplx> mult;
};

PropagatorCache make_propagator(const GridSpec& g, double t, double eta = 0.0);
Field apply_propagator(const Field& f, const PropagatorCache& cache);

Field free_propagate(const Field& f, double t, double eta = 0.0);

// Interaction-picture profile w~(t) = U(-t) w(t).
Field tilde_profile(const Field& w, double t);

} // namespace lrh
