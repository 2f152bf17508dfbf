#pragma once

#include <array>

#include "apfc/field.hpp"
#include "apfc/grid.hpp"
#include "apfc/model.hpp"

namespace apfc {

// Simulation state: the three complex amplitudes, the beta(r) field that
// carries the eigenstrain, and the parameters they evolve under.
struct AmplitudeState {
    Grid2D grid;
    std::array<ComplexField, ReciprocalModeSet::count> etas;
    ScalarField beta;
    ModelParams params;
    ReciprocalModeSet modes;
    double time = 0.0;

    void validate() const;
};

// State with all amplitudes set to a uniform real value (the standard
// initialization: phi_plus at beta = 1 everywhere).
AmplitudeState uniform_state(const Grid2D& grid, const ModelParams& params,
                             const ScalarField& beta, double amplitude);

}  // namespace apfc
