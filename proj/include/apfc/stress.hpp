#pragma once

#include <array>
#include <utility>
#include <vector>

#include "apfc/dynamics.hpp"
#include "apfc/state.hpp"

namespace apfc {

struct StressField {
    ScalarField sxx;
    ScalarField sxy;
    ScalarField syy;
};

struct Profile {
    std::vector<double> coordinates;
    std::vector<double> values;
};

// Rectangular window in physical coordinates, used for density reconstruction.
struct Window {
    double x0 = 0.0;
    double y0 = 0.0;
    double wx = 0.0;
    double wy = 0.0;
};

// Amplitude-level stress:
//   sigma_lm = 2 Re sum_j [ D_l(G_j eta_j) conj(D_m eta_j)
//                         + D_m(G_j eta_j) conj(D_l eta_j) ],  D_l = d_l + i q_l^j.
// The global factor 2 is the linear-elasticity calibration that accounts for
// the conjugate modes -q_j; it is recorded in run metadata. Derivatives are
// spectral; the isotropic pressure contribution is omitted.
StressField stress_from_amplitudes(const AmplitudeState& s);
StressField stress_from_amplitudes(const AmplitudeState& s, const Evolver& ev);

inline constexpr double stress_normalization = 2.0;

// n(r) = n0 + sum_j eta_j e^{i q_j . r} + c.c. on an oversampled window grid;
// amplitudes are interpolated bilinearly (they vary on scales >> a0).
ScalarField density_reconstruct(const AmplitudeState& s, const Window& window, int oversample);

// Pointwise least-squares solve of q_j . u = arg(eta_j): with the triangular
// mode set the normal equations give u = (2/(3 q0^2)) sum_j arg(eta_j) q_j.
// Diagnostic only; valid while |q_j . u| < pi (no unwrapping).
std::pair<ScalarField, ScalarField> displacement_from_phases(const AmplitudeState& s);

enum class Axis { x, y };

// Samples f along the grid line nearest to the requested offset; coordinates
// are raw grid coordinates in [0, l).
Profile line_profile(const ScalarField& f, Axis axis, double offset);

}  // namespace apfc
