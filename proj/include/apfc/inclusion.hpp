#pragma once

#include <array>

#include "apfc/field.hpp"
#include "apfc/grid.hpp"

namespace apfc {

// Circular inclusion with a tanh-smoothed interface of width w carrying a
// dilatational eigenstrain.
struct InclusionSpec {
    std::array<double, 2> center{0.0, 0.0};
    double radius = 0.0;
    double width = 0.0;
    double eigenstrain = 0.0;

    void validate() const;
};

// Signed distance |point - center| - radius; negative inside.
double signed_distance_circle(const std::array<double, 2>& point, const InclusionSpec& inc);

// chi_w(d) = (1 - tanh(d/w)) / 2: 1 deep inside, 0 far outside, 1/2 at d = 0.
double chi_w(double d, double w);

// beta(r) = 1 + (1/(1+eps) - 1) chi_w(d(r)): 1 in the matrix, 1/(1+eps) deep
// inside the inclusion. Distances use the minimum-image convention.
ScalarField beta_field(const Grid2D& grid, const InclusionSpec& inc);

// Minimum-image signed distance sampled on the grid; used for interface masks.
ScalarField signed_distance_field(const Grid2D& grid, const InclusionSpec& inc);

}  // namespace apfc
