#include "apfc/inclusion.hpp"

#include <cmath>
#include <stdexcept>

namespace apfc {

void InclusionSpec::validate() const {
    if (!(radius > 0.0)) throw std::invalid_argument("InclusionSpec: radius must be positive");
    if (!(width > 0.0)) throw std::invalid_argument("InclusionSpec: width must be positive");
    if (!(eigenstrain > -1.0))
        throw std::invalid_argument("InclusionSpec: eigenstrain must exceed -1");
}

double signed_distance_circle(const std::array<double, 2>& point, const InclusionSpec& inc) {
    const double dx = point[0] - inc.center[0];
    const double dy = point[1] - inc.center[1];
    return std::hypot(dx, dy) - inc.radius;
}

double chi_w(double d, double w) {
    if (!(w > 0.0)) throw std::invalid_argument("chi_w: width must be positive");
    return 0.5 * (1.0 - std::tanh(d / w));
}

namespace {

double min_image(double delta, double period) {
    return delta - period * std::round(delta / period);
}

}  // namespace

ScalarField signed_distance_field(const Grid2D& grid, const InclusionSpec& inc) {
    inc.validate();
    ScalarField d(grid);
    for (int iy = 0; iy < grid.ny; ++iy) {
        const double wy = min_image(iy * grid.dy() - inc.center[1], grid.ly);
        for (int ix = 0; ix < grid.nx; ++ix) {
            const double wx = min_image(ix * grid.dx() - inc.center[0], grid.lx);
            d(ix, iy) = std::hypot(wx, wy) - inc.radius;
        }
    }
    return d;
}

ScalarField beta_field(const Grid2D& grid, const InclusionSpec& inc) {
    inc.validate();
    const double beta_in = 1.0 / (1.0 + inc.eigenstrain);
    ScalarField beta = signed_distance_field(grid, inc);
    for (double& v : beta.values) v = 1.0 + (beta_in - 1.0) * chi_w(v, inc.width);
    return beta;
}

}  // namespace apfc
