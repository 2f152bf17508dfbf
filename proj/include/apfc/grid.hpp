#pragma once

#include <cstddef>
#include <numbers>
#include <stdexcept>

namespace apfc {

// Uniform periodic grid. Samples sit at (ix*dx, iy*dy); storage is row-major,
// index iy*nx + ix.
struct Grid2D {
    int nx = 0;
    int ny = 0;
    double lx = 0.0;
    double ly = 0.0;

    Grid2D() = default;

    Grid2D(int nx_, int ny_, double lx_, double ly_) : nx(nx_), ny(ny_), lx(lx_), ly(ly_) {
        if (nx < 8 || ny < 8 || nx % 2 != 0 || ny % 2 != 0)
            throw std::invalid_argument("Grid2D: nx and ny must be even and >= 8");
        if (!(lx > 0.0) || !(ly > 0.0))
            throw std::invalid_argument("Grid2D: lx and ly must be positive");
    }

    double dx() const { return lx / nx; }
    double dy() const { return ly / ny; }
    double cell_area() const { return dx() * dy(); }
    std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }

    // Wavenumber of FFT bin i: k = 2*pi*m/l with m in {-n/2, ..., n/2-1},
    // standard FFT ordering (bin n/2 of an even n carries -n/2).
    static double bin_wavenumber(int i, int n, double l) {
        const int m = (i < (n + 1) / 2) ? i : i - n;
        return 2.0 * std::numbers::pi * static_cast<double>(m) / l;
    }
    double kx(int ix) const { return bin_wavenumber(ix, nx, lx); }
    double ky(int iy) const { return bin_wavenumber(iy, ny, ly); }

    bool operator==(const Grid2D&) const = default;
};

}  // namespace apfc
