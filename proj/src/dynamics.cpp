#include "apfc/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "apfc/errors.hpp"

namespace apfc {

void SolverConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("SolverConfig: dt must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("SolverConfig: tol must be positive");
    if (max_steps < 0) throw std::invalid_argument("SolverConfig: max_steps must be >= 0");
    if (energy_check_every <= 0)
        throw std::invalid_argument("SolverConfig: energy_check_every must be positive");
}

Evolver::Evolver(const Grid2D& grid, const ReciprocalModeSet& modes, const ModelParams& params)
    : ops_(grid), params_(params), modes_(modes) {
    params_.validate();
    for (int j = 0; j < ReciprocalModeSet::count; ++j)
        sym_[j] = ops_.advected_laplacian_symbol(modes.modes[j]);
}

ComplexField Evolver::apply_G(const ComplexField& eta, int j, const ScalarField& beta) const {
    require_same_grid(eta, ops_.grid(), "apply_G: amplitude grid mismatch");
    require_same_grid(beta, ops_.grid(), "apply_G: beta grid mismatch");
    ComplexField out = ops_.apply_symbol(eta, sym_[j]);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double b = beta.values[i];
        out.values[i] += (b * b - 1.0) * eta.values[i];
    }
    return out;
}

double Evolver::free_energy(const AmplitudeState& s) const {
    s.validate();
    const std::size_t n = s.grid.size();
    std::vector<double> dens(n, 0.0);
    for (int j = 0; j < ReciprocalModeSet::count; ++j) {
        const ComplexField ge = apply_G(s.etas[j], j, s.beta);
        for (std::size_t i = 0; i < n; ++i) {
            const double a2 = std::norm(s.etas[j].values[i]);
            dens[i] += params_.b0x * std::norm(ge.values[i]) - 1.5 * params_.v * a2 * a2;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double phi_sum = 2.0 * (std::norm(s.etas[0].values[i]) + std::norm(s.etas[1].values[i]) +
                                      std::norm(s.etas[2].values[i]));
        const std::complex<double> triad =
            s.etas[0].values[i] * s.etas[1].values[i] * s.etas[2].values[i];
        dens[i] += 0.5 * params_.delta_b0 * phi_sum + 0.75 * params_.v * phi_sum * phi_sum -
                   4.0 * params_.tau * triad.real();
    }
    double sum = 0.0;
    for (double v : dens) sum += v;
    return sum * s.grid.cell_area();
}

std::array<ComplexField, ReciprocalModeSet::count> Evolver::rhs(const AmplitudeState& s) const {
    s.validate();
    const std::size_t n = s.grid.size();
    std::array<ComplexField, ReciprocalModeSet::count> out;
    for (int j = 0; j < ReciprocalModeSet::count; ++j) {
        const int a = (j + 1) % 3, b = (j + 2) % 3;
        const ComplexField g2 = apply_G(apply_G(s.etas[j], j, s.beta), j, s.beta);
        out[j] = ComplexField(s.grid);
        for (std::size_t i = 0; i < n; ++i) {
            const double phi_sum =
                2.0 * (std::norm(s.etas[0].values[i]) + std::norm(s.etas[1].values[i]) +
                       std::norm(s.etas[2].values[i]));
            const std::complex<double> t =
                (params_.delta_b0 + 3.0 * params_.v * (phi_sum - std::norm(s.etas[j].values[i]))) *
                    s.etas[j].values[i] +
                params_.b0x * g2.values[i] -
                2.0 * params_.tau * std::conj(s.etas[a].values[i] * s.etas[b].values[i]);
            out[j].values[i] = -params_.q0 * t;
        }
    }
    return out;
}

double Evolver::imex_step(AmplitudeState& s, const SolverConfig& cfg) const {
    const std::size_t n = s.grid.size();
    const double dtq = cfg.dt * params_.q0;
    const std::vector<double> mask = cfg.dealias ? ops_.dealias_mask() : std::vector<double>{};

    std::vector<double> phi_sum(n);
    for (std::size_t i = 0; i < n; ++i)
        phi_sum[i] = 2.0 * (std::norm(s.etas[0].values[i]) + std::norm(s.etas[1].values[i]) +
                            std::norm(s.etas[2].values[i]));

    std::array<ComplexField, ReciprocalModeSet::count> next;
    double residual = 0.0;
    for (int j = 0; j < ReciprocalModeSet::count; ++j) {
        const int a = (j + 1) % 3, b = (j + 2) % 3;
        const ComplexField& eta = s.etas[j];
        const ComplexField ehat = ops_.forward(eta);

        // G_j eta via the symbol, reusing ehat to save one transform.
        ComplexField tmp(s.grid);
        for (std::size_t i = 0; i < n; ++i) tmp.values[i] = ehat.values[i] * sym_[j][i];
        ComplexField ge = ops_.inverse(tmp);
        for (std::size_t i = 0; i < n; ++i) {
            const double v = s.beta.values[i] * s.beta.values[i] - 1.0;
            ge.values[i] += v * eta.values[i];
        }
        const ComplexField gehat = ops_.forward(ge);
        for (std::size_t i = 0; i < n; ++i) tmp.values[i] = gehat.values[i] * sym_[j][i];
        ComplexField g2e = ops_.inverse(tmp);
        for (std::size_t i = 0; i < n; ++i) {
            const double v = s.beta.values[i] * s.beta.values[i] - 1.0;
            g2e.values[i] += v * ge.values[i];
        }

        // Full explicit evaluation T, then subtract the implicit symbol part.
        ComplexField t(s.grid);
        for (std::size_t i = 0; i < n; ++i) {
            t.values[i] =
                (params_.delta_b0 + 3.0 * params_.v * (phi_sum[i] - std::norm(eta.values[i]))) *
                    eta.values[i] +
                params_.b0x * g2e.values[i] -
                2.0 * params_.tau * std::conj(s.etas[a].values[i] * s.etas[b].values[i]);
        }
        ComplexField nhat = ops_.forward(t);
        for (std::size_t i = 0; i < n; ++i) {
            const double implicit = params_.delta_b0 + params_.b0x * sym_[j][i] * sym_[j][i];
            nhat.values[i] -= implicit * ehat.values[i];
            if (cfg.dealias) nhat.values[i] *= mask[i];
            nhat.values[i] = (ehat.values[i] - dtq * nhat.values[i]) / (1.0 + dtq * implicit);
        }
        next[j] = ops_.inverse(nhat);

        // NaN-propagating max: std::max would silently drop non-finite entries.
        double dmax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = std::abs(next[j].values[i] - eta.values[i]);
            if (d > dmax || std::isnan(d)) dmax = d;
        }
        const double r = dmax / cfg.dt;
        if (r > residual || std::isnan(r)) residual = r;
    }

    if (!std::isfinite(residual))
        throw DivergenceError("imex_step: non-finite values; reduce dt");

    s.etas = std::move(next);
    s.time += cfg.dt;
    return residual;
}

RelaxationReport Evolver::relax(AmplitudeState& s, const SolverConfig& cfg,
                                const StepHook& hook) const {
    cfg.validate();
    s.validate();
    RelaxationReport rep;
    rep.energy_history.emplace_back(s.time, free_energy(s));
    double residual = 0.0;
    while (rep.steps_taken < cfg.max_steps) {
        residual = imex_step(s, cfg);
        ++rep.steps_taken;
        if (rep.steps_taken % cfg.energy_check_every == 0)
            rep.energy_history.emplace_back(s.time, free_energy(s));
        if (hook.every > 0 && hook.fn && rep.steps_taken % hook.every == 0)
            hook.fn(s, rep.steps_taken);
        if (residual < cfg.tol) {
            rep.converged = true;
            break;
        }
    }
    if (rep.steps_taken > 0 && rep.steps_taken % cfg.energy_check_every != 0)
        rep.energy_history.emplace_back(s.time, free_energy(s));
    rep.final_residual = residual;
    return rep;
}

ComplexField apply_G(const ComplexField& eta, const std::array<double, 2>& q,
                     const ScalarField& beta) {
    const double qn = std::hypot(q[0], q[1]);
    ModelParams p;
    p.q0 = qn > 0.0 ? qn : 1.0;
    ReciprocalModeSet m = triangular_mode_set(p.q0);
    m.modes[0] = q;
    Evolver ev(eta.grid, m, p);
    return ev.apply_G(eta, 0, beta);
}

double free_energy(const AmplitudeState& s) {
    return Evolver(s.grid, s.modes, s.params).free_energy(s);
}

std::array<ComplexField, ReciprocalModeSet::count> rhs(const AmplitudeState& s) {
    return Evolver(s.grid, s.modes, s.params).rhs(s);
}

RelaxationReport relax(AmplitudeState& s, const SolverConfig& cfg) {
    return Evolver(s.grid, s.modes, s.params).relax(s, cfg);
}

}  // namespace apfc
