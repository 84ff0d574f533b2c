#pragma once
#include "lrh/field.hpp"

namespace lrh {

// Trigonometric interpolation of f at the rescaled lattice of `target`:
// returns g with g(y) = f(alpha * y) for every sample point y of target.
// Valid while the points alpha*y stay inside f's fundamental box; otherwise
// the periodic extension would be evaluated, which the caller must not want.
Field dilate_sample(const Field& f, const GridSpec& target, double alpha);

// Smallest radius containing all but `tail` of the mass of f (physical space,
// sup-norm radius over axes). Used by resolution checks.
double effective_radius(const Field& f, double tail = 1e-12);

} // namespace lrh
