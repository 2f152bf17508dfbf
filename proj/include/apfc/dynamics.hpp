#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "apfc/spectral.hpp"
#include "apfc/state.hpp"

namespace apfc {

struct SolverConfig {
    double dt = 0.1;
    double tol = 1e-6;  // steady-state threshold on max_j |d eta_j|_inf / dt
    long max_steps = 100000;
    int energy_check_every = 100;
    bool dealias = false;  // 2/3-rule on the explicit term; off by default

    void validate() const;
};

struct RelaxationReport {
    long steps_taken = 0;
    double final_residual = 0.0;
    bool converged = false;
    std::vector<std::pair<double, double>> energy_history;  // (time, energy)
};

// Optional checkpoint callback, invoked after every `every` steps.
struct StepHook {
    long every = 0;  // 0 disables
    std::function<void(const AmplitudeState&, long step)> fn;
};

// Owns the spectral plans and per-mode Fourier symbols for one grid and mode
// set; all evolution entry points live here so plans are built once.
class Evolver {
  public:
    Evolver(const Grid2D& grid, const ReciprocalModeSet& modes, const ModelParams& params);

    // G_j eta = lap(eta) + 2i q_j . grad(eta) + (beta^2 - 1) eta.
    ComplexField apply_G(const ComplexField& eta, int j, const ScalarField& beta) const;

    // Grid quadrature of sum_j (B0x |G_j eta_j|^2 - (3v/2)|eta_j|^4)
    // + (dB0/2) Phi + (3v/4) Phi^2 - 2 tau (eta1 eta2 eta3 + c.c.),
    // with Phi = 2 sum_j |eta_j|^2.
    double free_energy(const AmplitudeState& s) const;

    // d eta_j / dt = -q0 [ (dB0 + 3v(Phi - |eta_j|^2)) eta_j
    //                      + B0x G_j^2 eta_j - 2 tau conj(eta_a eta_b) ].
    std::array<ComplexField, ReciprocalModeSet::count> rhs(const AmplitudeState& s) const;

    // One semi-implicit step: dB0 + B0x L_j^2 implicit in Fourier space,
    // everything else explicit. Returns max_j |d eta_j|_inf / dt.
    double imex_step(AmplitudeState& s, const SolverConfig& cfg) const;

    RelaxationReport relax(AmplitudeState& s, const SolverConfig& cfg,
                           const StepHook& hook = {}) const;

    const SpectralOps& ops() const { return ops_; }

  private:
    SpectralOps ops_;
    ModelParams params_;
    ReciprocalModeSet modes_;
    std::array<std::vector<double>, ReciprocalModeSet::count> sym_;  // s_j(k)
};

// Convenience wrappers that build a temporary Evolver.
ComplexField apply_G(const ComplexField& eta, const std::array<double, 2>& q,
                     const ScalarField& beta);
double free_energy(const AmplitudeState& s);
std::array<ComplexField, ReciprocalModeSet::count> rhs(const AmplitudeState& s);
RelaxationReport relax(AmplitudeState& s, const SolverConfig& cfg);

}  // namespace apfc
