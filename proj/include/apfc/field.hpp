#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "apfc/errors.hpp"
#include "apfc/grid.hpp"

namespace apfc {

template <class T>
struct Field {
    Grid2D grid;
    std::vector<T> values;

    Field() = default;
    explicit Field(const Grid2D& g, T fill = T{}) : grid(g), values(g.size(), fill) {}

    T& operator()(int ix, int iy) {
        return values[static_cast<std::size_t>(iy) * grid.nx + ix];
    }
    const T& operator()(int ix, int iy) const {
        return values[static_cast<std::size_t>(iy) * grid.nx + ix];
    }
    std::size_t size() const { return values.size(); }
};

using ScalarField = Field<double>;
using ComplexField = Field<std::complex<double>>;

template <class T>
void require_same_grid(const Field<T>& f, const Grid2D& g, const char* what) {
    if (!(f.grid == g)) throw GridMismatchError(what);
}

inline double max_abs(const ScalarField& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

inline double max_abs(const ComplexField& f) {
    double m = 0.0;
    for (const auto& v : f.values) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace apfc
