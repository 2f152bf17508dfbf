#include "apfc/state.hpp"

#include <cmath>

#include "apfc/errors.hpp"

namespace apfc {

void AmplitudeState::validate() const {
    params.validate();
    for (const auto& e : etas) require_same_grid(e, grid, "AmplitudeState: amplitude grid mismatch");
    require_same_grid(beta, grid, "AmplitudeState: beta grid mismatch");
    for (double b : beta.values)
        if (!(b > 0.0) || !std::isfinite(b))
            throw std::invalid_argument("AmplitudeState: beta must be positive and finite");
}

AmplitudeState uniform_state(const Grid2D& grid, const ModelParams& params,
                             const ScalarField& beta, double amplitude) {
    AmplitudeState s;
    s.grid = grid;
    s.params = params;
    s.modes = triangular_mode_set(params.q0);
    s.beta = beta;
    for (auto& e : s.etas) e = ComplexField(grid, amplitude);
    s.validate();
    return s;
}

}  // namespace apfc
