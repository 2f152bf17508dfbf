#include "apfc/spectral.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

namespace apfc {

namespace {

// FFTW planning mutates global state; execution via the new-array interface
// is thread-safe once plans exist.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

struct SpectralOps::Impl {
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    std::size_t n = 0;

    explicit Impl(const Grid2D& g) : n(g.size()) {
        std::lock_guard<std::mutex> lock(planner_mutex());
        in = fftw_alloc_complex(n);
        out = fftw_alloc_complex(n);
        // Row-major data: the slow dimension is y, so FFTW sees (ny, nx).
        fwd = fftw_plan_dft_2d(g.ny, g.nx, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_2d(g.ny, g.nx, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
    }

    ~Impl() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(in);
        fftw_free(out);
    }

    void run(const ComplexField& src, ComplexField& dst, fftw_plan plan, double scale) const {
        std::memcpy(in, src.values.data(), n * sizeof(fftw_complex));
        fftw_execute(plan);
        auto* o = reinterpret_cast<const std::complex<double>*>(out);
        if (scale == 1.0) {
            std::memcpy(dst.values.data(), o, n * sizeof(fftw_complex));
        } else {
            for (std::size_t i = 0; i < n; ++i) dst.values[i] = o[i] * scale;
        }
    }
};

SpectralOps::SpectralOps(const Grid2D& grid) : grid_(grid), impl_(std::make_unique<Impl>(grid)) {}

SpectralOps::~SpectralOps() = default;

ComplexField SpectralOps::forward(const ComplexField& f) const {
    require_same_grid(f, grid_, "SpectralOps::forward: grid mismatch");
    ComplexField out(grid_);
    impl_->run(f, out, impl_->fwd, 1.0);
    return out;
}

ComplexField SpectralOps::inverse(const ComplexField& fhat) const {
    require_same_grid(fhat, grid_, "SpectralOps::inverse: grid mismatch");
    ComplexField out(grid_);
    impl_->run(fhat, out, impl_->bwd, 1.0 / static_cast<double>(grid_.size()));
    return out;
}

ComplexField SpectralOps::apply_symbol(const ComplexField& f, const std::vector<double>& sym) const {
    ComplexField fhat = forward(f);
    for (std::size_t i = 0; i < fhat.size(); ++i) fhat.values[i] *= sym[i];
    return inverse(fhat);
}

std::pair<ComplexField, ComplexField> SpectralOps::gradient(const ComplexField& f) const {
    ComplexField fhat = forward(f);
    ComplexField gx(grid_), gy(grid_);
    std::size_t idx = 0;
    for (int iy = 0; iy < grid_.ny; ++iy) {
        const double ky = grid_.ky(iy);
        for (int ix = 0; ix < grid_.nx; ++ix, ++idx) {
            const std::complex<double> v = fhat.values[idx];
            const std::complex<double> iv(-v.imag(), v.real());  // i*v
            gx.values[idx] = iv * grid_.kx(ix);
            gy.values[idx] = iv * ky;
        }
    }
    return {inverse(gx), inverse(gy)};
}

ComplexField SpectralOps::laplacian(const ComplexField& f) const {
    ComplexField fhat = forward(f);
    std::size_t idx = 0;
    for (int iy = 0; iy < grid_.ny; ++iy) {
        const double ky = grid_.ky(iy);
        for (int ix = 0; ix < grid_.nx; ++ix, ++idx) {
            const double kx = grid_.kx(ix);
            fhat.values[idx] *= -(kx * kx + ky * ky);
        }
    }
    return inverse(fhat);
}

std::vector<double> SpectralOps::advected_laplacian_symbol(const std::array<double, 2>& q) const {
    std::vector<double> sym(grid_.size());
    std::size_t idx = 0;
    for (int iy = 0; iy < grid_.ny; ++iy) {
        const double ky = grid_.ky(iy);
        for (int ix = 0; ix < grid_.nx; ++ix, ++idx) {
            const double kx = grid_.kx(ix);
            sym[idx] = -(kx * kx + ky * ky) - 2.0 * (q[0] * kx + q[1] * ky);
        }
    }
    return sym;
}

std::vector<double> SpectralOps::dealias_mask() const {
    const double kx_cut = (2.0 / 3.0) * grid_.kx(grid_.nx / 2 - 1);
    const double ky_cut = (2.0 / 3.0) * grid_.ky(grid_.ny / 2 - 1);
    std::vector<double> mask(grid_.size());
    std::size_t idx = 0;
    for (int iy = 0; iy < grid_.ny; ++iy) {
        const double ky = grid_.ky(iy);
        for (int ix = 0; ix < grid_.nx; ++ix, ++idx) {
            const double kx = grid_.kx(ix);
            mask[idx] = (std::abs(kx) <= kx_cut && std::abs(ky) <= ky_cut) ? 1.0 : 0.0;
        }
    }
    return mask;
}

}  // namespace apfc
