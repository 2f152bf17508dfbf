#include "apfc/stress.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "apfc/errors.hpp"
#include "apfc/model.hpp"

namespace apfc {

StressField stress_from_amplitudes(const AmplitudeState& s, const Evolver& ev) {
    s.validate();
    const std::size_t n = s.grid.size();
    StressField out{ScalarField(s.grid), ScalarField(s.grid), ScalarField(s.grid)};
    for (int j = 0; j < ReciprocalModeSet::count; ++j) {
        const auto& q = s.modes.modes[j];
        const ComplexField ge = ev.apply_G(s.etas[j], j, s.beta);
        auto [dxe, dye] = ev.ops().gradient(s.etas[j]);
        auto [dxg, dyg] = ev.ops().gradient(ge);
        const std::complex<double> iu(0.0, 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            const std::complex<double> e = s.etas[j].values[i];
            const std::complex<double> g = ge.values[i];
            const std::complex<double> dx_e = dxe.values[i] + iu * q[0] * e;
            const std::complex<double> dy_e = dye.values[i] + iu * q[1] * e;
            const std::complex<double> dx_g = dxg.values[i] + iu * q[0] * g;
            const std::complex<double> dy_g = dyg.values[i] + iu * q[1] * g;
            out.sxx.values[i] +=
                stress_normalization * 2.0 * (dx_g * std::conj(dx_e)).real();
            out.syy.values[i] +=
                stress_normalization * 2.0 * (dy_g * std::conj(dy_e)).real();
            out.sxy.values[i] +=
                stress_normalization * (dx_g * std::conj(dy_e) + dy_g * std::conj(dx_e)).real();
        }
    }
    return out;
}

StressField stress_from_amplitudes(const AmplitudeState& s) {
    Evolver ev(s.grid, s.modes, s.params);
    return stress_from_amplitudes(s, ev);
}

namespace {

std::complex<double> bilinear_periodic(const ComplexField& f, double x, double y) {
    const Grid2D& g = f.grid;
    const double fx = x / g.dx();
    const double fy = y / g.dy();
    const int ix0 = static_cast<int>(std::floor(fx));
    const int iy0 = static_cast<int>(std::floor(fy));
    const double tx = fx - ix0;
    const double ty = fy - iy0;
    auto wrap = [](int i, int n) { return ((i % n) + n) % n; };
    const int x0 = wrap(ix0, g.nx), x1 = wrap(ix0 + 1, g.nx);
    const int y0 = wrap(iy0, g.ny), y1 = wrap(iy0 + 1, g.ny);
    return (1.0 - tx) * (1.0 - ty) * f(x0, y0) + tx * (1.0 - ty) * f(x1, y0) +
           (1.0 - tx) * ty * f(x0, y1) + tx * ty * f(x1, y1);
}

}  // namespace

ScalarField density_reconstruct(const AmplitudeState& s, const Window& window, int oversample) {
    s.validate();
    if (oversample < 4)
        throw std::invalid_argument("density_reconstruct: oversample must be >= 4");
    if (window.wx <= 0.0 || window.wy <= 0.0 || window.x0 < 0.0 || window.y0 < 0.0 ||
        window.x0 + window.wx > s.grid.lx || window.y0 + window.wy > s.grid.ly)
        throw std::out_of_range("density_reconstruct: window outside domain");

    const double fine_dx = s.grid.dx() / oversample;
    const double fine_dy = s.grid.dy() / oversample;
    int nx = std::max(8, static_cast<int>(std::lround(window.wx / fine_dx)));
    int ny = std::max(8, static_cast<int>(std::lround(window.wy / fine_dy)));
    nx += nx % 2;
    ny += ny % 2;
    ScalarField n_field(Grid2D(nx, ny, window.wx, window.wy), s.params.n0);
    for (int iy = 0; iy < ny; ++iy) {
        const double y = window.y0 + iy * (window.wy / ny);
        for (int ix = 0; ix < nx; ++ix) {
            const double x = window.x0 + ix * (window.wx / nx);
            double acc = 0.0;
            for (int j = 0; j < ReciprocalModeSet::count; ++j) {
                const auto& q = s.modes.modes[j];
                const std::complex<double> amp = bilinear_periodic(s.etas[j], x, y);
                const double phase = q[0] * x + q[1] * y;
                acc += 2.0 * (amp * std::complex<double>(std::cos(phase), std::sin(phase))).real();
            }
            n_field(ix, iy) += acc;
        }
    }
    return n_field;
}

std::pair<ScalarField, ScalarField> displacement_from_phases(const AmplitudeState& s) {
    s.validate();
    const double phi_ref = equilibrium_amplitude(s.params, 1.0, EquilibriumBranch::plus);
    const double floor_mag = 1e-6 * phi_ref;
    const double q02 = s.modes.q0 * s.modes.q0;
    ScalarField ux(s.grid), uy(s.grid);
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
        double sx = 0.0, sy = 0.0;
        for (int j = 0; j < ReciprocalModeSet::count; ++j) {
            const std::complex<double> e = s.etas[j].values[i];
            if (std::abs(e) < floor_mag)
                throw DegenerateAmplitudeError(
                    "displacement_from_phases: amplitude magnitude below 1e-6 phi_plus");
            const double theta = std::arg(e);
            sx += theta * s.modes.modes[j][0];
            sy += theta * s.modes.modes[j][1];
        }
        ux.values[i] = 2.0 / (3.0 * q02) * sx;
        uy.values[i] = 2.0 / (3.0 * q02) * sy;
    }
    return {std::move(ux), std::move(uy)};
}

Profile line_profile(const ScalarField& f, Axis axis, double offset) {
    const Grid2D& g = f.grid;
    Profile p;
    if (axis == Axis::x) {
        if (offset < 0.0 || offset > g.ly) throw std::out_of_range("line_profile: offset outside domain");
        const int iy = static_cast<int>(std::lround(offset / g.dy())) % g.ny;
        p.coordinates.resize(g.nx);
        p.values.resize(g.nx);
        for (int ix = 0; ix < g.nx; ++ix) {
            p.coordinates[ix] = ix * g.dx();
            p.values[ix] = f(ix, iy);
        }
    } else {
        if (offset < 0.0 || offset > g.lx) throw std::out_of_range("line_profile: offset outside domain");
        const int ix = static_cast<int>(std::lround(offset / g.dx())) % g.nx;
        p.coordinates.resize(g.ny);
        p.values.resize(g.ny);
        for (int iy = 0; iy < g.ny; ++iy) {
            p.coordinates[iy] = iy * g.dy();
            p.values[iy] = f(ix, iy);
        }
    }
    return p;
}

}  // namespace apfc
