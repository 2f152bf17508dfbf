#pragma once

#include <array>
#include <utility>

#include "apfc/elasticity.hpp"

namespace apfc {

// Thermodynamic constants of the amplitude free energy. Defaults are the
// benchmark values used throughout: tau = 1/2, v = 1/3, B0x = 1, dB0 = 0.04.
struct ModelParams {
    double b0x = 1.0;
    double delta_b0 = 0.04;
    double tau = 0.5;
    double v = 1.0 / 3.0;
    double q0 = 1.0;
    double n0 = 0.0;  // fixed; nonzero average density is out of scope

    void validate() const;
};

// The three reciprocal vectors of the one-mode triangular set and the
// associated lattice spacing a0 = 4*pi/(sqrt(3) q0).
struct ReciprocalModeSet {
    std::array<std::array<double, 2>, 3> modes{};
    double a0 = 0.0;
    double q0 = 1.0;

    static constexpr int count = 3;
};

enum class EquilibriumBranch { plus, minus };

ReciprocalModeSet triangular_mode_set(double q0);

// Equilibrium amplitude (tau +/- sqrt(tau^2 - 15 v (dB0 + (beta^2-1)^2)))/(15 v).
// Throws NoRealSolutionError when the discriminant is negative.
double equilibrium_amplitude(const ModelParams& p, double beta, EquilibriumBranch branch);

// Bounds on delta_b0: first component is the real-solution bound
// tau^2/(15 v) - (beta^2-1)^2, second the solid-liquid coexistence bound
// 8 tau^2/(135 v) - (beta^2-1)^2. The solid is favored iff delta_b0 < second.
std::pair<double, double> phase_thresholds(const ModelParams& p, double beta);

// Amplitude-level elastic constants: lambda = mu = 3 phi^2, nu = 1/4
// (plane strain), E = mu(3 lambda + 2 mu)/(lambda + mu).
IsotropicElasticity lame_constants(double phi);

// Energy per unit area of the uniform single-amplitude state eta_j = phi:
// 3 (dB0 + (beta^2-1)^2) phi^2 + (45 v / 2) phi^4 - 4 tau phi^3.
double uniform_energy_density(const ModelParams& p, double beta, double phi);

}  // namespace apfc
