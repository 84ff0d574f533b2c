#pragma once
#include <limits>

#include "lrh/field.hpp"

namespace lrh {

inline constexpr double r_infinity = std::numeric_limits<double>::infinity();

// L^r grid quadrature norm; r = infinity is the sample max. r < 1 is rejected.
double lebesgue_norm(const Field& f, double r);

// ||<omega>^sigma f|| (inhomogeneous) or ||omega^sigma f|| (homogeneous),
// computed by quadrature over the frequency lattice.
double sobolev_norm(const Field& f, double sigma, bool homogeneous = false);

double l2_norm(const Field& f);

// ||omega^{sigma +- 0} f|| = sqrt(||omega^{sigma+eps} f|| * ||omega^{sigma-eps} f||)
double pm_norm(const Field& f, double sigma, double eps);

// L^2 pairing <f, g> = integral of conj(f)*g (physical or spectral, consistent).
cplx inner(const Field& f, const Field& g);

} // namespace lrh
