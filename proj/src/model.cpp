#include "apfc/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "apfc/errors.hpp"

namespace apfc {

void ModelParams::validate() const {
    if (!(v > 0.0)) throw std::invalid_argument("ModelParams: v must be positive");
    if (!(b0x > 0.0)) throw std::invalid_argument("ModelParams: b0x must be positive");
    if (!(q0 > 0.0)) throw std::invalid_argument("ModelParams: q0 must be positive");
    if (n0 != 0.0) throw std::invalid_argument("ModelParams: n0 is fixed to 0");
}

ReciprocalModeSet triangular_mode_set(double q0) {
    if (!(q0 > 0.0)) throw std::invalid_argument("triangular_mode_set: q0 must be positive");
    const double s = std::sqrt(3.0) / 2.0;
    ReciprocalModeSet m;
    m.modes = {{{-s * q0, -0.5 * q0}, {0.0, q0}, {s * q0, -0.5 * q0}}};
    m.a0 = 4.0 * std::numbers::pi / (std::sqrt(3.0) * q0);
    m.q0 = q0;
    return m;
}

double equilibrium_amplitude(const ModelParams& p, double beta, EquilibriumBranch branch) {
    p.validate();
    // The amplitude quartic is minimized on the tau > 0 side; the opposite
    // sign has no solid minimum with this sign convention.
    if (!(p.tau > 0.0)) throw std::domain_error("equilibrium_amplitude: tau must be positive");
    const double b2 = beta * beta - 1.0;
    const double disc = p.tau * p.tau - 15.0 * p.v * (p.delta_b0 + b2 * b2);
    if (disc < 0.0)
        throw NoRealSolutionError("equilibrium_amplitude: negative discriminant (liquid-only regime)");
    const double root = std::sqrt(disc);
    const double sign = (branch == EquilibriumBranch::plus) ? 1.0 : -1.0;
    return (p.tau + sign * root) / (15.0 * p.v);
}

std::pair<double, double> phase_thresholds(const ModelParams& p, double beta) {
    p.validate();
    const double b2 = beta * beta - 1.0;
    const double real_bound = p.tau * p.tau / (15.0 * p.v) - b2 * b2;
    const double coex_bound = 8.0 * p.tau * p.tau / (135.0 * p.v) - b2 * b2;
    return {real_bound, coex_bound};
}

IsotropicElasticity lame_constants(double phi) {
    const double lam = 3.0 * phi * phi;
    if (lam == 0.0) {
        // Degenerate zero-amplitude medium; report zero moduli directly since
        // from_lame rejects mu = 0.
        IsotropicElasticity el;
        el.lambda = 0.0;
        el.mu = 0.0;
        el.nu = 0.25;
        el.e_mod = 0.0;
        return el;
    }
    return IsotropicElasticity::from_lame(lam, lam);
}

double uniform_energy_density(const ModelParams& p, double beta, double phi) {
    const double b2 = beta * beta - 1.0;
    const double phi2 = phi * phi;
    return 3.0 * (p.delta_b0 + b2 * b2) * phi2 + 22.5 * p.v * phi2 * phi2 -
           4.0 * p.tau * phi2 * phi;
}

}  // namespace apfc
