#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"

#include "apfc/errors.hpp"
#include "apfc/model.hpp"
#include "apfc/state.hpp"
#include "apfc/stress.hpp"

using namespace apfc;

namespace {

double phi_plus() {
    return equilibrium_amplitude(ModelParams{}, 1.0, EquilibriumBranch::plus);
}

AmplitudeState uniform(const Grid2D& g, double amplitude, double beta_value = 1.0) {
    return uniform_state(g, ModelParams{}, ScalarField(g, beta_value), amplitude);
}

}  // namespace

TEST_CASE("relaxed crystal carries no stress") {
    const Grid2D g(32, 32, 24.0, 24.0);
    const StressField sig = stress_from_amplitudes(uniform(g, phi_plus()));
    CHECK(max_abs(sig.sxx) < 1e-13);
    CHECK(max_abs(sig.sxy) < 1e-13);
    CHECK(max_abs(sig.syy) < 1e-13);
}

TEST_CASE("homogeneous lattice mismatch: closed-form stress") {
    // Constant amplitudes with beta = beta0: sigma_lm = 6 (beta0^2-1) q0^2 phi^2 d_lm,
    // from sum_j q_l q_m = (3/2) q0^2 d_lm and the calibrated global factor 2.
    const Grid2D g(16, 16, 12.0, 12.0);
    const double phi = 0.1;
    const double eps = 1e-3;
    const double b0 = 1.0 / (1.0 + eps);
    const StressField sig = stress_from_amplitudes(uniform(g, phi, b0));
    const double expect = 6.0 * (b0 * b0 - 1.0) * phi * phi;
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(sig.sxx.values[i] == doctest::Approx(expect).epsilon(1e-8));
        CHECK(sig.syy.values[i] == doctest::Approx(expect).epsilon(1e-8));
        CHECK(std::abs(sig.sxy.values[i]) < 1e-8 * std::abs(expect));
    }

    // q0 != 1 scales the closed form by q0^2.
    ModelParams p2;
    p2.q0 = 2.0;
    const AmplitudeState s2 = uniform_state(g, p2, ScalarField(g, b0), phi);
    const StressField sig2 = stress_from_amplitudes(s2);
    CHECK(sig2.sxx.values[0] == doctest::Approx(4.0 * expect).epsilon(1e-8));
}

TEST_CASE("long-wavelength displacement reproduces the elastic constants") {
    // eta_j = phi+ exp(-i q_j . u(r)) with u = A sin(2 pi x / lx) x-hat is
    // periodic, so the spectral stress path applies. Pointwise, sigma should
    // match C : grad u with lambda = mu = 3 phi+^2 up to O((2 pi/lx)^2).
    const double a0 = triangular_mode_set(1.0).a0;
    const Grid2D g(128, 128, 32.0 * a0, 32.0 * a0);
    const double phi = phi_plus();
    const double k = 2.0 * std::numbers::pi / g.lx;
    const double amp = 2e-4 / k;  // max strain 2e-4

    AmplitudeState s = uniform(g, phi);
    for (int j = 0; j < 3; ++j) {
        const auto& q = s.modes.modes[j];
        for (int iy = 0; iy < g.ny; ++iy)
            for (int ix = 0; ix < g.nx; ++ix) {
                const double ux = amp * std::sin(k * ix * g.dx());
                s.etas[j](ix, iy) = phi * std::exp(std::complex<double>(0.0, -q[0] * ux));
            }
    }
    const StressField sig = stress_from_amplitudes(s);

    const double lam = 3.0 * phi * phi;
    // Regression of sigma against the local strain over all grid points.
    double sxx_num = 0.0, syy_num = 0.0, den = 0.0;
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            const double exx = amp * k * std::cos(k * ix * g.dx());
            sxx_num += sig.sxx(ix, iy) * exx;
            syy_num += sig.syy(ix, iy) * exx;
            den += exx * exx;
        }
    const double slope_xx = sxx_num / den;  // should be lambda + 2 mu = 3 lambda
    const double slope_yy = syy_num / den;  // should be lambda
    CHECK(slope_xx == doctest::Approx(3.0 * lam).epsilon(0.01));
    CHECK(slope_yy == doctest::Approx(lam).epsilon(0.01));
    CHECK(max_abs(sig.sxy) < 0.01 * lam * amp * k);
}

TEST_CASE("stress rejects mismatched grids") {
    const Grid2D g(16, 16, 12.0, 12.0);
    const Grid2D other(32, 32, 12.0, 12.0);
    AmplitudeState s = uniform(g, phi_plus());
    const Evolver ev(other, s.modes, s.params);
    CHECK_THROWS_AS(stress_from_amplitudes(s, ev), GridMismatchError);
}

TEST_CASE("density reconstruction") {
    const double a0 = triangular_mode_set(1.0).a0;
    const Grid2D g(64, 64, 16.0 * a0, 16.0 * a0);
    const double phi = phi_plus();
    const AmplitudeState s = uniform(g, phi);

    Window win;
    win.x0 = 0.0;
    win.y0 = 0.0;
    win.wx = 2.0 * a0;
    win.wy = 2.0 * a0;
    const ScalarField n = density_reconstruct(s, win, 8);

    // All phases vanish at the origin: n = n0 + 6 phi, the global maximum.
    CHECK(n(0, 0) == doctest::Approx(6.0 * phi).epsilon(1e-12));
    double global_max = -1e30;
    for (double v : n.values) global_max = std::max(global_max, v);
    CHECK(global_max == doctest::Approx(6.0 * phi).epsilon(1e-9));

    // (a0, 0) is a lattice translation, hence another maximum; the fine grid
    // hits it exactly (a0 is 32 fine cells at oversample 8).
    const int i_a0 = n.grid.nx / 2;
    CHECK(n.grid.dx() * i_a0 == doctest::Approx(a0).epsilon(1e-12));
    CHECK(n(i_a0, 0) == doctest::Approx(6.0 * phi).epsilon(1e-9));
    // Strictly smaller half way between the two peaks.
    CHECK(n(i_a0 / 2, 0) < 6.0 * phi - 1e-3);

    const AmplitudeState z = uniform(g, 0.0);
    const ScalarField nz = density_reconstruct(z, win, 4);
    CHECK(max_abs(nz) < 1e-15);

    CHECK_THROWS_AS(density_reconstruct(s, win, 3), std::invalid_argument);
    Window bad = win;
    bad.x0 = 15.5 * a0;  // extends past the domain edge
    CHECK_THROWS_AS(density_reconstruct(s, bad, 4), std::out_of_range);
}

TEST_CASE("density reconstruction commutes with gauge translation") {
    const double a0 = triangular_mode_set(1.0).a0;
    const Grid2D g(32, 32, 8.0 * a0, 8.0 * a0);
    const AmplitudeState s = uniform(g, phi_plus());

    // Shift the crystal by u0 via the gauge phases, then sample the window
    // shifted by the same amount: identical densities.
    const std::array<double, 2> u0{0.31 * a0, 0.0};
    AmplitudeState t = s;
    for (int j = 0; j < 3; ++j) {
        const auto& q = s.modes.modes[j];
        const std::complex<double> ph = std::exp(std::complex<double>(0.0, -(q[0] * u0[0])));
        for (auto& v : t.etas[j].values) v *= ph;
    }

    Window win;
    win.x0 = 2.0 * a0;
    win.y0 = 2.0 * a0;
    win.wx = a0;
    win.wy = a0;
    Window shifted = win;
    shifted.x0 += u0[0];

    const ScalarField n_ref = density_reconstruct(s, win, 4);
    const ScalarField n_shift = density_reconstruct(t, shifted, 4);
    for (std::size_t i = 0; i < n_ref.size(); ++i)
        CHECK(n_shift.values[i] == doctest::Approx(n_ref.values[i]).epsilon(1e-10));
}

TEST_CASE("displacement extraction from phases") {
    const Grid2D g(16, 16, 12.0, 12.0);
    const double phi = phi_plus();

    // Real amplitudes: zero displacement.
    auto [ux0, uy0] = displacement_from_phases(uniform(g, phi));
    CHECK(max_abs(ux0) < 1e-15);
    CHECK(max_abs(uy0) < 1e-15);

    // Exact recovery of a rigid shift.
    const std::array<double, 2> u0{0.1, -0.2};
    AmplitudeState s = uniform(g, phi);
    for (int j = 0; j < 3; ++j) {
        const auto& q = s.modes.modes[j];
        const std::complex<double> ph =
            std::exp(std::complex<double>(0.0, q[0] * u0[0] + q[1] * u0[1]));
        for (auto& v : s.etas[j].values) v *= ph;
    }
    auto [ux, uy] = displacement_from_phases(s);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(ux.values[i] == doctest::Approx(u0[0]).epsilon(1e-13));
        CHECK(uy.values[i] == doctest::Approx(u0[1]).epsilon(1e-13));
    }

    // Inconsistent random phases: matches the normal-equation solve
    // u = argmin sum_j (q_j.u - theta_j)^2 (computed here from scratch).
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    AmplitudeState r = uniform(g, phi);
    std::array<double, 3> theta{u(rng), u(rng), u(rng)};
    for (int j = 0; j < 3; ++j) {
        const std::complex<double> ph = std::exp(std::complex<double>(0.0, theta[j]));
        for (auto& v : r.etas[j].values) v *= ph;
    }
    double m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    double b[2] = {0.0, 0.0};
    for (int j = 0; j < 3; ++j) {
        const auto& q = r.modes.modes[j];
        for (int l = 0; l < 2; ++l) {
            for (int c = 0; c < 2; ++c) m[l][c] += q[l] * q[c];
            b[l] += q[l] * theta[j];
        }
    }
    const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    const double ex = (m[1][1] * b[0] - m[0][1] * b[1]) / det;
    const double ey = (m[0][0] * b[1] - m[1][0] * b[0]) / det;
    auto [rx, ry] = displacement_from_phases(r);
    CHECK(rx.values[0] == doctest::Approx(ex).epsilon(1e-12));
    CHECK(ry.values[0] == doctest::Approx(ey).epsilon(1e-12));

    // Vanishing amplitude anywhere is refused.
    AmplitudeState d = uniform(g, phi);
    d.etas[2].values[7] = 1e-8 * phi;
    CHECK_THROWS_AS(displacement_from_phases(d), DegenerateAmplitudeError);
}

TEST_CASE("line profiles") {
    const Grid2D g(16, 12, 8.0, 6.0);
    ScalarField f(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) f(ix, iy) = ix * g.dx();

    const Profile px = line_profile(f, Axis::x, 0.0);
    REQUIRE(px.values.size() == static_cast<std::size_t>(g.nx));
    for (std::size_t i = 0; i < px.values.size(); ++i) {
        CHECK(px.values[i] == doctest::Approx(px.coordinates[i]));
        if (i) CHECK(px.coordinates[i] > px.coordinates[i - 1]);
    }

    // Offset snaps to the nearest grid line.
    ScalarField h(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) h(ix, iy) = iy;
    CHECK(line_profile(h, Axis::x, 0.26).values[0] == doctest::Approx(1.0));  // dy = 0.5
    CHECK(line_profile(h, Axis::x, 0.24).values[0] == doctest::Approx(0.0));

    const Profile py = line_profile(f, Axis::y, 3.0);
    REQUIRE(py.values.size() == static_cast<std::size_t>(g.ny));
    for (double v : py.values) CHECK(v == doctest::Approx(3.0));

    CHECK_THROWS_AS(line_profile(f, Axis::x, -0.1), std::out_of_range);
    CHECK_THROWS_AS(line_profile(f, Axis::x, 6.5), std::out_of_range);
    CHECK_THROWS_AS(line_profile(f, Axis::y, 8.5), std::out_of_range);
}
