#pragma once

#include <array>

#include "apfc/elasticity.hpp"
#include "apfc/field.hpp"
#include "apfc/grid.hpp"
#include "apfc/stress.hpp"

namespace apfc {

// Circular inclusion of radius a with dilatational eigenstrain eps* delta_kl
// in an infinite isotropic plane-strain medium.
struct EshelbyProblem {
    double radius = 0.0;
    double eigenstrain = 0.0;
    IsotropicElasticity elastic;
    std::array<double, 2> center{0.0, 0.0};

    void validate() const;
};

// Interior Eshelby tensor (position independent, uniform interior fields).
Rank4Tensor2D eshelby_interior(double nu);

// Exterior Eshelby tensor at a point given relative to the center,
// rho = a/|r|, e = r/|r|. Interior points must use eshelby_interior.
Rank4Tensor2D eshelby_exterior(double nu, const std::array<double, 2>& point, double a);

// sigma = C : (S : eps* - chi eps*) with sharp chi; points with |r| <= a take
// the interior branch.
SymTensor2 eshelby_stress(const EshelbyProblem& prob, const std::array<double, 2>& point);

// Independent axisymmetric solution of the same problem: interior
// sigma = 2(lambda+mu)(A - eps*) delta with A = (lambda+mu) eps*/(lambda+2 mu);
// exterior sigma_rr = -2 mu A a^2/r^2, sigma_tt = +2 mu A a^2/r^2.
SymTensor2 lame_circular_reference(const EshelbyProblem& prob, const std::array<double, 2>& point);

// The analytic stress sampled on a periodic grid (minimum-image displacement
// from the center), for field-vs-field comparison with simulation output.
StressField sample_analytic_stress(const EshelbyProblem& prob, const Grid2D& grid);

}  // namespace apfc
