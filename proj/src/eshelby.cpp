#include "apfc/eshelby.hpp"

#include <cmath>
#include <stdexcept>

namespace apfc {

void EshelbyProblem::validate() const {
    if (!(radius > 0.0)) throw std::invalid_argument("EshelbyProblem: radius must be positive");
    if (!(elastic.mu > 0.0)) throw std::invalid_argument("EshelbyProblem: mu must be positive");
}

namespace {

void check_nu(double nu) {
    if (!(nu > 0.0) || !(nu < 0.5))
        throw std::invalid_argument("Eshelby tensor: nu must lie in (0, 0.5)");
}

double kron(int a, int b) { return a == b ? 1.0 : 0.0; }

}  // namespace

Rank4Tensor2D eshelby_interior(double nu) {
    check_nu(nu);
    const double A = (4.0 * nu - 1.0) / (8.0 * (1.0 - nu));
    const double B = (3.0 - 4.0 * nu) / (8.0 * (1.0 - nu));
    Rank4Tensor2D t;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int m = 0; m < 2; ++m)
                for (int n = 0; n < 2; ++n)
                    t(i, j, m, n) = A * kron(i, j) * kron(m, n) +
                                    B * (kron(i, m) * kron(j, n) + kron(i, n) * kron(j, m));
    return t;
}

Rank4Tensor2D eshelby_exterior(double nu, const std::array<double, 2>& point, double a) {
    check_nu(nu);
    const double r = std::hypot(point[0], point[1]);
    if (!(r > 0.0)) throw std::invalid_argument("eshelby_exterior: point at the singular origin");
    const double rho2 = (a * a) / (r * r);
    const double e[2] = {point[0] / r, point[1] / r};
    const double pre = rho2 / (8.0 * (1.0 - nu));
    const double c_dd = rho2 + 4.0 * nu - 2.0;
    const double c_ii = rho2 - 4.0 * nu + 2.0;
    const double c_dee_mn = 4.0 * (1.0 - rho2);
    const double c_dee_ij = 4.0 * (1.0 - 2.0 * nu - rho2);
    const double c_mixed = 4.0 * (nu - rho2);
    const double c_eeee = 8.0 * (3.0 * rho2 - 2.0);
    Rank4Tensor2D t;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int m = 0; m < 2; ++m)
                for (int n = 0; n < 2; ++n)
                    t(i, j, m, n) =
                        pre * (c_dd * kron(i, j) * kron(m, n) +
                               c_ii * (kron(i, m) * kron(j, n) + kron(i, n) * kron(j, m)) +
                               c_dee_mn * kron(i, j) * e[m] * e[n] +
                               c_dee_ij * kron(m, n) * e[i] * e[j] +
                               c_mixed * (kron(i, m) * e[j] * e[n] + kron(j, m) * e[i] * e[n] +
                                          kron(i, n) * e[j] * e[m] + kron(j, n) * e[i] * e[m]) +
                               c_eeee * e[i] * e[j] * e[m] * e[n]);
    return t;
}

SymTensor2 eshelby_stress(const EshelbyProblem& prob, const std::array<double, 2>& point) {
    prob.validate();
    const std::array<double, 2> rel{point[0] - prob.center[0], point[1] - prob.center[1]};
    const double r = std::hypot(rel[0], rel[1]);
    const bool interior = r <= prob.radius;  // boundary assigned to the interior branch
    const SymTensor2 eigen{prob.eigenstrain, 0.0, prob.eigenstrain};
    const Rank4Tensor2D S = interior ? eshelby_interior(prob.elastic.nu)
                                     : eshelby_exterior(prob.elastic.nu, rel, prob.radius);
    SymTensor2 elastic_strain = S.contract(eigen);
    if (interior) {
        elastic_strain.xx -= eigen.xx;
        elastic_strain.xy -= eigen.xy;
        elastic_strain.yy -= eigen.yy;
    }
    return elasticity_tensor(prob.elastic).contract(elastic_strain);
}

SymTensor2 lame_circular_reference(const EshelbyProblem& prob, const std::array<double, 2>& point) {
    prob.validate();
    const double lam = prob.elastic.lambda, mu = prob.elastic.mu;
    const double A = (lam + mu) * prob.eigenstrain / (lam + 2.0 * mu);
    const std::array<double, 2> rel{point[0] - prob.center[0], point[1] - prob.center[1]};
    const double r = std::hypot(rel[0], rel[1]);
    if (r <= prob.radius) {
        const double s = 2.0 * (lam + mu) * (A - prob.eigenstrain);
        return {s, 0.0, s};
    }
    const double rho2 = prob.radius * prob.radius / (r * r);
    const double s_rr = -2.0 * mu * A * rho2;
    const double s_tt = +2.0 * mu * A * rho2;
    const double ex = rel[0] / r, ey = rel[1] / r;
    return {s_rr * ex * ex + s_tt * ey * ey, (s_rr - s_tt) * ex * ey,
            s_rr * ey * ey + s_tt * ex * ex};
}

StressField sample_analytic_stress(const EshelbyProblem& prob, const Grid2D& grid) {
    prob.validate();
    StressField out{ScalarField(grid), ScalarField(grid), ScalarField(grid)};
    auto min_image = [](double delta, double period) {
        return delta - period * std::round(delta / period);
    };
    for (int iy = 0; iy < grid.ny; ++iy) {
        const double ry = min_image(iy * grid.dy() - prob.center[1], grid.ly);
        for (int ix = 0; ix < grid.nx; ++ix) {
            const double rx = min_image(ix * grid.dx() - prob.center[0], grid.lx);
            const SymTensor2 s =
                eshelby_stress(prob, {prob.center[0] + rx, prob.center[1] + ry});
            out.sxx(ix, iy) = s.xx;
            out.sxy(ix, iy) = s.xy;
            out.syy(ix, iy) = s.yy;
        }
    }
    return out;
}

}  // namespace apfc
