#pragma once
#include <vector>

#include "lrh/grid.hpp"

namespace lrh {

enum class Space { physical, spectral };

// Complex scalar field on a periodic grid, stored either as physical samples
// or as continuum-normalized Fourier coefficients (unitary convention):
//   uhat(xi_k) = (2*pi)^{-n/2} h^n  sum_m u(x_m) exp(-i xi_k . x_m)
//   u(x_m)     = (2*pi)^{-n/2} dk^n sum_k uhat(xi_k) exp(+i xi_k . x_m)
// Fields are immutable values in the public API; operations return new fields.
class Field {
public:
    Field() = default;
    Field(GridSpec g, Space s) : grid_(g), space_(s), v_(g.size(), cplx{0.0, 0.0}) {}
    Field(GridSpec g, Space s, std::vector<cplx> values)
        : grid_(g), space_(s), v_(std::move(values)) {
        if (v_.size() != grid_.size())
            throw ConfigError("Field: value count does not match grid");
    }

    const GridSpec& grid() const { return grid_; }
    Space space() const { return space_; }
    std::size_t size() const { return v_.size(); }

    const std::vector<cplx>& values() const { return v_; }
    std::vector<cplx>& values() { return v_; }
    cplx operator[](std::size_t i) const { return v_[i]; }
    cplx& operator[](std::size_t i) { return v_[i]; }

    Field& operator+=(const Field& o) {
        require_same(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    Field& operator-=(const Field& o) {
        require_same(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }
    Field& operator*=(cplx c) {
        for (auto& z : v_) z *= c;
        return *this;
    }

    friend Field operator+(Field a, const Field& b) { a += b; return a; }
    friend Field operator-(Field a, const Field& b) { a -= b; return a; }
    friend Field operator*(cplx c, Field a) { a *= c; return a; }

private:
    void require_same(const Field& o) const {
        if (!(grid_ == o.grid_) || space_ != o.space_)
            throw ConfigError("Field: operands live on different grids or spaces");
    }

    GridSpec grid_{};
    Space space_ = Space::physical;
    std::vector<cplx> v_{};
};

// Discrete Fourier transform pair (no-ops when already in the target space).
Field to_fourier(const Field& f);
Field from_fourier(const Field& f);
Field in_space(const Field& f, Space s);

// Pointwise physical-space product a*b (no dealiasing; see multipliers.hpp).
Field pointwise(const Field& a, const Field& b);
// Pointwise |a|^2 as a physical-space field.
Field abs_squared(const Field& a);
Field conjugate(const Field& a);

} // namespace lrh
