#pragma once
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "lrh/errors.hpp"

namespace lrh {

using cplx = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846264338327950288;

// Periodic grid: per axis, N samples x_m = -L/2 + m*L/N and the dual lattice
// xi_k = (2*pi/L)*k with k in {-N/2, ..., N/2-1}. Spectral storage uses FFTW
// index order (k and k-N share storage slot k mod N).
struct GridSpec {
    int dim = 2;
    int points = 128;   // per axis, power of two, >= 16
    double box = 16.0 * pi;

    void validate() const {
        if (dim < 2) throw ConfigError("GridSpec: dim must be >= 2");
        if (points < 16 || (points & (points - 1)) != 0)
            throw ConfigError("GridSpec: points_per_axis must be a power of two >= 16");
        if (!(box > 0.0)) throw ConfigError("GridSpec: box_length must be positive");
    }

    std::size_t size() const {
        std::size_t s = 1;
        for (int a = 0; a < dim; ++a) s *= static_cast<std::size_t>(points);
        return s;
    }

    double spacing() const { return box / points; }          // h
    double dk() const { return 2.0 * pi / box; }             // frequency lattice step
    double kmax_axis() const { return pi * points / box; }   // per-axis |xi| bound
    double dealias_radius() const { return (2.0 / 3.0) * kmax_axis(); }

    // signed index of storage slot i (frequency = dk()*signed_index)
    int signed_index(int i) const { return i < points / 2 ? i : i - points; }
    double x_at(int m) const { return -0.5 * box + m * spacing(); }
    double xi_at(int i) const { return dk() * signed_index(i); }

    // The grid whose physical lattice coincides with this one's frequency lattice.
    GridSpec dual() const { return GridSpec{dim, points, 2.0 * pi * points / box}; }

    bool operator==(const GridSpec&) const = default;
};

// Decode a flat row-major index into per-axis indices (axis 0 slowest).
inline void decode_index(const GridSpec& g, std::size_t flat, int* idx) {
    for (int a = g.dim - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(flat % g.points);
        flat /= g.points;
    }
}

inline double xi_norm2(const GridSpec& g, const int* idx) {
    double s = 0.0;
    for (int a = 0; a < g.dim; ++a) {
        double xi = g.xi_at(idx[a]);
        s += xi * xi;
    }
    return s;
}

inline double x_norm2(const GridSpec& g, const int* idx) {
    double s = 0.0;
    for (int a = 0; a < g.dim; ++a) {
        double x = g.x_at(idx[a]);
        s += x * x;
    }
    return s;
}

} // namespace lrh
