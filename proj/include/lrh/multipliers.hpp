#pragma once
#include <functional>
#include <vector>

#include "lrh/field.hpp"

namespace lrh {

// A scalar function of |xi| applied diagonally in Fourier space, with an
// explicit value at the zero mode. Homogeneous powers |xi|^sigma use
// zero_mode = 0 (the mean of a real potential only shifts the global phase).
struct RadialMultiplier {
    std::function<cplx(double)> profile;   // evaluated at |xi| > 0
    cplx zero_mode = cplx{0.0, 0.0};
};

Field apply_multiplier(const Field& f, const RadialMultiplier& m);

RadialMultiplier omega_power(double sigma);     // |xi|^sigma, zero mode 0
RadialMultiplier bracket_power(double sigma);   // (1+|xi|^2)^{sigma/2}, zero mode 1

Field apply_omega_power(const Field& f, double sigma);

// Spectral gradient/divergence (multiplier i*xi_a per component).
std::vector<Field> gradient(const Field& f);
Field divergence(const std::vector<Field>& v);
Field laplacian(const Field& f);

// Radial 2/3-rule mask: keeps |xi| < dealias_radius(), kills the rest.
Field dealias(const Field& f);
// Physical product of two band-limited fields followed by the 2/3 mask.
Field multiply_dealiased(const Field& a, const Field& b);

// Exact (alias-free) products: embed spectra into the 2x-refined lattice on the
// same box, multiply there. Used by the inequality checks where norms of
// products must be exact for band-limited inputs.
Field pad_spectrum(const Field& f, int factor = 2);
Field truncate_spectrum(const Field& f, const GridSpec& target);
Field exact_product(const Field& a, const Field& b);   // lives on padded grid

// Fraction of |f|^2 mass within `margin` of the box boundary (sup over axes).
double boundary_mass_fraction(const Field& f, double margin);

} // namespace lrh
