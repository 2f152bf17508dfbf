#pragma once

#include <complex>
#include <memory>
#include <utility>
#include <vector>

#include "apfc/field.hpp"
#include "apfc/grid.hpp"

namespace apfc {

// FFT-backed differentiation on one grid. Transform normalization: forward
// unscaled, inverse scaled by 1/(nx*ny). Each instance owns its FFTW plans
// and scratch buffers; concurrent calls on one instance are not safe, but
// separate instances may run in parallel.
class SpectralOps {
  public:
    explicit SpectralOps(const Grid2D& grid);
    ~SpectralOps();
    SpectralOps(const SpectralOps&) = delete;
    SpectralOps& operator=(const SpectralOps&) = delete;

    const Grid2D& grid() const { return grid_; }

    ComplexField forward(const ComplexField& f) const;
    ComplexField inverse(const ComplexField& fhat) const;

    // ifft(sym .* fft(f)) for a real Fourier symbol sampled in FFT bin order.
    ComplexField apply_symbol(const ComplexField& f, const std::vector<double>& sym) const;

    std::pair<ComplexField, ComplexField> gradient(const ComplexField& f) const;
    ComplexField laplacian(const ComplexField& f) const;

    // Symbol of laplacian + 2i q.grad: -|k|^2 - 2 q.k, bin-ordered.
    std::vector<double> advected_laplacian_symbol(const std::array<double, 2>& q) const;

    // 2/3-rule mask (1 keep, 0 drop), bin-ordered.
    std::vector<double> dealias_mask() const;

  private:
    struct Impl;
    Grid2D grid_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace apfc
