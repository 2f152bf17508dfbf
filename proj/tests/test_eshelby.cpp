#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "apfc/eshelby.hpp"
#include "apfc/model.hpp"

using namespace apfc;

namespace {

EshelbyProblem benchmark_problem() {
    EshelbyProblem prob;
    prob.radius = 1.0;
    prob.eigenstrain = 0.01;
    prob.elastic = lame_constants(equilibrium_amplitude(ModelParams{}, 1.0,
                                                        EquilibriumBranch::plus));
    return prob;
}

double frob(const SymTensor2& t) {
    return std::sqrt(t.xx * t.xx + 2.0 * t.xy * t.xy + t.yy * t.yy);
}

}  // namespace

TEST_CASE("interior tensor: dilatational contraction and symmetries") {
    const double nu = 0.25;
    const Rank4Tensor2D s = eshelby_interior(nu);

    const SymTensor2 eig{1.0, 0.0, 1.0};
    const SymTensor2 c = s.contract(eig);
    // Constrained strain eps^c = eps*/(2(1-nu)) delta = (2/3) eps* delta.
    CHECK(c.xx == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(c.yy == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(c.xy == doctest::Approx(0.0));

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int m = 0; m < 2; ++m)
                for (int n = 0; n < 2; ++n) {
                    CHECK(s(i, j, m, n) == doctest::Approx(s(j, i, m, n)).epsilon(1e-15));
                    CHECK(s(i, j, m, n) == doctest::Approx(s(i, j, n, m)).epsilon(1e-15));
                }

    CHECK_THROWS_AS(eshelby_interior(0.0), std::invalid_argument);
    CHECK_THROWS_AS(eshelby_interior(0.5), std::invalid_argument);
}

TEST_CASE("exterior tensor: decay, symmetries, singular origin") {
    const double nu = 0.25, a = 1.0;

    CHECK_THROWS_AS(eshelby_exterior(nu, {0.0, 0.0}, a), std::invalid_argument);

    // Far field: every component decays like rho^2 = (a/r)^2.
    const std::array<double, 2> dir{0.6, 0.8};
    const Rank4Tensor2D s1 = eshelby_exterior(nu, {100.0 * dir[0], 100.0 * dir[1]}, a);
    const Rank4Tensor2D s2 = eshelby_exterior(nu, {200.0 * dir[0], 200.0 * dir[1]}, a);
    for (int c = 0; c < 16; ++c) {
        if (std::abs(s1.c[c]) < 1e-9) continue;
        CHECK(s2.c[c] / s1.c[c] == doctest::Approx(0.25).epsilon(1e-3));
    }

    // Minor symmetries at a generic point.
    const Rank4Tensor2D s = eshelby_exterior(0.31, {1.7, -0.9}, a);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int m = 0; m < 2; ++m)
                for (int n = 0; n < 2; ++n) {
                    CHECK(s(i, j, m, n) == doctest::Approx(s(j, i, m, n)).epsilon(1e-14));
                    CHECK(s(i, j, m, n) == doctest::Approx(s(i, j, n, m)).epsilon(1e-14));
                }
}

TEST_CASE("benchmark interior and exterior stress values") {
    EshelbyProblem prob = benchmark_problem();
    const double lam = prob.elastic.lambda;

    // Interior: sigma_xx = sigma_yy = -(2/3)(lambda+mu) eps* ~ -8.378e-4.
    const SymTensor2 in = eshelby_stress(prob, {0.2, -0.3});
    const double expect_in = -(2.0 / 3.0) * 2.0 * lam * prob.eigenstrain;
    CHECK(in.xx == doctest::Approx(expect_in).epsilon(1e-12));
    CHECK(in.yy == doctest::Approx(expect_in).epsilon(1e-12));
    CHECK(in.xy == doctest::Approx(0.0));
    CHECK(expect_in == doctest::Approx(-8.377709e-4).epsilon(1e-5));

    // Exterior on the x axis at r = 2a: sigma_xx = -(1/3) mu eps* and
    // sigma_yy the opposite.
    const SymTensor2 ex = eshelby_stress(prob, {2.0, 0.0});
    CHECK(ex.xx == doctest::Approx(-lam * prob.eigenstrain / 3.0).epsilon(1e-12));
    CHECK(ex.yy == doctest::Approx(+lam * prob.eigenstrain / 3.0).epsilon(1e-12));
    CHECK(ex.xx == doctest::Approx(-2.094e-4).epsilon(1e-3));
    CHECK(ex.xy == doctest::Approx(0.0));

    // Zero eigenstrain: zero stress everywhere.
    EshelbyProblem zero = prob;
    zero.eigenstrain = 0.0;
    CHECK(frob(eshelby_stress(zero, {0.5, 0.0})) == 0.0);
    CHECK(frob(eshelby_stress(zero, {5.0, 2.0})) == 0.0);

    // Interior uniformity across random points.
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    for (int i = 0; i < 200; ++i) {
        const SymTensor2 t = eshelby_stress(prob, {u(rng), u(rng)});
        CHECK(std::abs(t.xx - in.xx) < 1e-15);
        CHECK(std::abs(t.yy - in.yy) < 1e-15);
        CHECK(std::abs(t.xy) < 1e-15);
    }
}

TEST_CASE("two independent routes agree at random points and moduli") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> mod(0.1, 2.0);
    std::uniform_real_distribution<double> pos(-4.0, 4.0);
    std::uniform_real_distribution<double> eig(-0.05, 0.05);

    for (int trial = 0; trial < 20; ++trial) {
        EshelbyProblem prob;
        prob.radius = 0.5 + mod(rng);
        prob.eigenstrain = eig(rng);
        prob.elastic = IsotropicElasticity::from_lame(mod(rng), mod(rng));
        prob.center = {pos(rng), pos(rng)};
        const double scale =
            2.0 * (prob.elastic.lambda + prob.elastic.mu) * std::abs(prob.eigenstrain) + 1e-30;
        for (int i = 0; i < 100; ++i) {
            const std::array<double, 2> p{prob.center[0] + pos(rng), prob.center[1] + pos(rng)};
            const SymTensor2 a = eshelby_stress(prob, p);
            const SymTensor2 b = lame_circular_reference(prob, p);
            CHECK(std::abs(a.xx - b.xx) < 1e-10 * scale);
            CHECK(std::abs(a.xy - b.xy) < 1e-10 * scale);
            CHECK(std::abs(a.yy - b.yy) < 1e-10 * scale);
        }
    }
}

TEST_CASE("traction continuity across the interface") {
    EshelbyProblem prob = benchmark_problem();
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < 32; ++i) {
        const double th = ang(rng);
        const double c = std::cos(th), s = std::sin(th);
        const SymTensor2 in = eshelby_stress(prob, {prob.radius * c * (1.0 - 1e-12),
                                                    prob.radius * s * (1.0 - 1e-12)});
        const SymTensor2 ex = eshelby_stress(prob, {prob.radius * c * (1.0 + 1e-12),
                                                    prob.radius * s * (1.0 + 1e-12)});
        // Normal traction sigma . n continuous; hoop component may jump.
        const double tn_in[2] = {in.xx * c + in.xy * s, in.xy * c + in.yy * s};
        const double tn_ex[2] = {ex.xx * c + ex.xy * s, ex.xy * c + ex.yy * s};
        CHECK(std::abs(tn_in[0] - tn_ex[0]) < 1e-12);
        CHECK(std::abs(tn_in[1] - tn_ex[1]) < 1e-12);
    }
}

TEST_CASE("exterior solution is trace-free and decays as r^-2") {
    EshelbyProblem prob = benchmark_problem();
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> rad(1.1, 60.0);
    for (int i = 0; i < 200; ++i) {
        const double th = ang(rng), r = rad(rng);
        const SymTensor2 t =
            eshelby_stress(prob, {r * std::cos(th), r * std::sin(th)});
        CHECK(std::abs(t.xx + t.yy) < 1e-15);
    }
    // |sigma| r^2 constant along a ray over [5a, 50a].
    const double th = 0.7;
    const double ref = frob(eshelby_stress(prob, {5.0 * std::cos(th), 5.0 * std::sin(th)})) * 25.0;
    for (double r = 5.0; r <= 50.0; r *= 1.5) {
        const double v =
            frob(eshelby_stress(prob, {r * std::cos(th), r * std::sin(th)})) * r * r;
        CHECK(v == doctest::Approx(ref).epsilon(1e-3));
    }
}

TEST_CASE("pointwise mechanical equilibrium of the analytic solution") {
    EshelbyProblem prob = benchmark_problem();
    const double a = prob.radius;

    auto div_residual = [&](const std::array<double, 2>& p, double h) {
        auto sxx = [&](double x, double y) { return eshelby_stress(prob, {x, y}).xx; };
        auto sxy = [&](double x, double y) { return eshelby_stress(prob, {x, y}).xy; };
        auto syy = [&](double x, double y) { return eshelby_stress(prob, {x, y}).yy; };
        const double dx_sxx = (sxx(p[0] + h, p[1]) - sxx(p[0] - h, p[1])) / (2.0 * h);
        const double dy_sxy = (sxy(p[0], p[1] + h) - sxy(p[0], p[1] - h)) / (2.0 * h);
        const double dx_sxy = (sxy(p[0] + h, p[1]) - sxy(p[0] - h, p[1])) / (2.0 * h);
        const double dy_syy = (syy(p[0], p[1] + h) - syy(p[0], p[1] - h)) / (2.0 * h);
        return std::hypot(dx_sxx + dy_sxy, dx_sxy + dy_syy);
    };

    const double h = a / 200.0;
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> rad(1.1, 3.0);
    const double scale = 2.0 * (prob.elastic.lambda + prob.elastic.mu) * prob.eigenstrain / a;
    for (int i = 0; i < 24; ++i) {
        const double r = rad(rng), th = ang(rng);
        const std::array<double, 2> p{r * std::cos(th), r * std::sin(th)};
        const double r1 = div_residual(p, h);
        CHECK(r1 < 1e-3 * scale);
        // Halving h shrinks the residual ~4x (pure O(h^2) discretization).
        if (r1 > 1e-12 * scale) CHECK(div_residual(p, 0.5 * h) < 0.6 * r1);
    }
}

TEST_CASE("analytic sampler matches pointwise evaluation with wrapping") {
    EshelbyProblem prob = benchmark_problem();
    prob.radius = 2.0;
    prob.center = {10.0, 10.0};
    const Grid2D g(40, 40, 20.0, 20.0);
    const StressField f = sample_analytic_stress(prob, g);

    // Grid point exactly at (2a, 0) from the center.
    const SymTensor2 s = eshelby_stress(prob, {14.0, 10.0});
    CHECK(f.sxx(28, 20) == doctest::Approx(s.xx).epsilon(1e-14));
    CHECK(f.syy(28, 20) == doctest::Approx(s.yy).epsilon(1e-14));

    // The wrap: sample at x = 0 sees the inclusion at image distance 10.
    const SymTensor2 wrapped = eshelby_stress(prob, {prob.center[0] - 10.0, prob.center[1]});
    CHECK(f.sxx(0, 20) == doctest::Approx(wrapped.xx).epsilon(1e-14));

    EshelbyProblem bad = prob;
    bad.radius = 0.0;
    CHECK_THROWS_AS(sample_analytic_stress(bad, g), std::invalid_argument);
}
