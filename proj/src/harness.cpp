#include "apfc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>

#include "json.hpp"

#include "apfc/dynamics.hpp"
#include "apfc/errors.hpp"
#include "apfc/io.hpp"

namespace apfc {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

CompareResult compare_fields(const ScalarField& a, const ScalarField& b,
                             const std::vector<unsigned char>& mask) {
    require_same_grid(a, b.grid, "compare_fields");
    if (mask.size() != a.size())
        throw GridMismatchError("compare_fields: mask size does not match grid");
    double diff2 = 0.0, ref2 = 0.0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (!mask[i]) continue;
        const double d = a.values[i] - b.values[i];
        diff2 += d * d;
        ref2 += b.values[i] * b.values[i];
    }
    CompareResult r;
    r.abs_l2 = std::sqrt(diff2);
    if (ref2 == 0.0) {
        r.exact_zero_reference = true;
        r.rel_l2 = 0.0;
    } else {
        r.rel_l2 = std::sqrt(diff2 / ref2);
    }
    return r;
}

PowerFit fit_power_law(const std::vector<double>& radii, const std::vector<double>& values) {
    if (radii.size() != values.size())
        throw std::invalid_argument("fit_power_law: length mismatch");
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] > 0.0 && std::abs(values[i]) > 0.0) {
            lx.push_back(std::log(radii[i]));
            ly.push_back(std::log(std::abs(values[i])));
        }
    }
    PowerFit fit;
    fit.points = static_cast<int>(lx.size());
    if (lx.size() < 2) return fit;
    const double n = static_cast<double>(lx.size());
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0.0) return fit;
    fit.exponent = sxy / sxx;
    fit.amplitude = std::exp(my - fit.exponent * mx);
    return fit;
}

namespace {

// First crossing of `level` walking outward from the center sample; linear
// interpolation between samples. Returns NaN when the level is never reached.
double crossing_distance(const Profile& p, std::size_t i_center, int step, double level,
                         bool rising) {
    const auto n = static_cast<long>(p.values.size());
    for (long i = static_cast<long>(i_center); i + step >= 0 && i + step < n; i += step) {
        const double v0 = p.values[i], v1 = p.values[i + step];
        const bool crossed = rising ? (v0 < level && v1 >= level) : (v0 > level && v1 <= level);
        if (crossed) {
            const double t = (level - v0) / (v1 - v0);
            const double x0 = p.coordinates[i], x1 = p.coordinates[i + step];
            return std::abs(x0 + t * (x1 - x0));
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double side_width(const Profile& p, std::size_t i_center, int step) {
    // Outer reference level: extremum of the signed deviation from the center
    // value on this side (the exterior stress peak just past the interface).
    const double lo = p.values[i_center];
    const auto n = static_cast<long>(p.values.size());
    double hi = lo;
    for (long i = static_cast<long>(i_center) + step; i >= 0 && i < n; i += step)
        hi = std::max(hi, p.values[i]);
    if (!(hi > lo)) return std::numeric_limits<double>::quiet_NaN();
    const double v10 = lo + 0.1 * (hi - lo);
    const double v90 = lo + 0.9 * (hi - lo);
    const double x10 = crossing_distance(p, i_center, step, v10, true);
    const double x90 = crossing_distance(p, i_center, step, v90, true);
    if (std::isnan(x10) || std::isnan(x90)) return std::numeric_limits<double>::quiet_NaN();
    return x90 - x10;
}

}  // namespace

double transition_width_10_90(const Profile& centered) {
    if (centered.values.size() < 4) return 0.0;
    std::size_t i0 = 0;
    for (std::size_t i = 1; i < centered.coordinates.size(); ++i)
        if (std::abs(centered.coordinates[i]) < std::abs(centered.coordinates[i0])) i0 = i;
    const double wl = side_width(centered, i0, -1);
    const double wr = side_width(centered, i0, +1);
    if (std::isnan(wl) && std::isnan(wr)) return 0.0;
    if (std::isnan(wl)) return wr;
    if (std::isnan(wr)) return wl;
    return 0.5 * (wl + wr);
}

double divergence_residual(const StressField& sigma, const SpectralOps& ops,
                           const std::vector<unsigned char>& mask) {
    require_same_grid(sigma.sxx, ops.grid(), "divergence_residual");
    const std::size_t n = ops.grid().size();
    auto to_complex = [&](const ScalarField& f) {
        ComplexField c(f.grid);
        for (std::size_t i = 0; i < n; ++i) c.values[i] = f.values[i];
        return c;
    };
    const auto gxx = ops.gradient(to_complex(sigma.sxx));
    const auto gxy = ops.gradient(to_complex(sigma.sxy));
    const auto gyy = ops.gradient(to_complex(sigma.syy));
    double div2 = 0.0, sig2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!mask[i]) continue;
        const double dx = gxx.first.values[i].real() + gxy.second.values[i].real();
        const double dy = gxy.first.values[i].real() + gyy.second.values[i].real();
        div2 += dx * dx + dy * dy;
        sig2 += sigma.sxx.values[i] * sigma.sxx.values[i] +
                2.0 * sigma.sxy.values[i] * sigma.sxy.values[i] +
                sigma.syy.values[i] * sigma.syy.values[i];
    }
    if (sig2 == 0.0) return 0.0;
    return std::sqrt(div2 / sig2);
}

EshelbyProblem analytic_problem(const RunConfig& cfg) {
    const InclusionSpec inc = cfg.make_inclusion();
    EshelbyProblem prob;
    prob.radius = inc.radius;
    prob.eigenstrain = inc.eigenstrain;
    prob.center = inc.center;
    const double phi = equilibrium_amplitude(cfg.params, 1.0, EquilibriumBranch::plus);
    prob.elastic = lame_constants(phi);
    return prob;
}

std::vector<unsigned char> bulk_mask(const ScalarField& distance, double width) {
    std::vector<unsigned char> m(distance.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = std::abs(distance.values[i]) > 3.0 * width ? 1 : 0;
    return m;
}

Profile centered_profile(const ScalarField& f, double center_x, double center_y) {
    Profile raw = line_profile(f, Axis::x, center_y);
    const double lx = f.grid.lx;
    Profile out;
    out.coordinates.resize(raw.coordinates.size());
    out.values = raw.values;
    for (std::size_t i = 0; i < raw.coordinates.size(); ++i) {
        double d = raw.coordinates[i] - center_x;
        d -= lx * std::round(d / lx);
        out.coordinates[i] = d;
    }
    std::vector<std::size_t> order(out.coordinates.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return out.coordinates[a] < out.coordinates[b]; });
    Profile sorted;
    sorted.coordinates.reserve(order.size());
    sorted.values.reserve(order.size());
    for (std::size_t i : order) {
        sorted.coordinates.push_back(out.coordinates[i]);
        sorted.values.push_back(out.values[i]);
    }
    return sorted;
}

namespace {

ordered_json report_json(const ComparisonReport& r) {
    auto cmp = [](const CompareResult& c) {
        ordered_json j;
        j["rel_l2"] = c.rel_l2;
        j["abs_l2"] = c.abs_l2;
        j["exact_zero_reference"] = c.exact_zero_reference;
        return j;
    };
    ordered_json j;
    j["converged"] = r.converged;
    j["steps"] = r.steps;
    j["final_residual"] = r.final_residual;
    j["energy_final"] = r.energy_final;
    j["rel_l2_bulk"] = {{"sigma_xx", cmp(r.sxx_bulk)},
                        {"sigma_xy", cmp(r.sxy_bulk)},
                        {"sigma_yy", cmp(r.syy_bulk)}};
    j["interior_plateau"] = r.interior_plateau;
    j["plateau_region"] = r.plateau_region;
    j["interior_plateau_analytic"] = r.interior_plateau_analytic;
    j["exterior_decay_exponent"] = r.exterior_decay_exponent;
    j["exterior_decay_exponent_analytic"] = r.exterior_decay_exponent_analytic;
    j["min_syy"] = r.min_syy;
    j["max_syy"] = r.max_syy;
    j["mean_syy"] = r.mean_syy;
    j["min_syy_normalized"] = r.min_syy_normalized;
    j["transition_width_10_90"] = r.transition_width;
    j["divsigma_rel_l2_bulk"] = r.divsigma_rel_l2_bulk;
    j["sweep"] = {{"parameter", r.sweep_parameter}, {"value", r.sweep_value}};
    return j;
}

void write_json(const fs::path& path, const ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string());
    out << j.dump(2) << "\n";
}

void write_metadata(const fs::path& path, const RunConfig& cfg, const ComparisonReport& rep) {
    const Grid2D grid = cfg.make_grid();
    const double phi = equilibrium_amplitude(cfg.params, 1.0, EquilibriumBranch::plus);
    const IsotropicElasticity el = lame_constants(phi);
    ordered_json j;
    j["version"] = project_version;
    j["config"] = cfg.resolved();
    j["grid"] = {{"nx", grid.nx}, {"ny", grid.ny}, {"lx", grid.lx},
                 {"ly", grid.ly}, {"dx", grid.dx()}, {"dy", grid.dy()}};
    j["derived"] = {{"a0", cfg.a0()},
                    {"phi_plus", phi},
                    {"lambda", el.lambda},
                    {"mu", el.mu},
                    {"nu", el.nu},
                    {"youngs_modulus", el.e_mod},
                    {"stress_normalization", stress_normalization}};
    j["convergence"] = {{"converged", rep.converged},
                        {"steps", rep.steps},
                        {"final_residual", rep.final_residual},
                        {"energy_final", rep.energy_final}};
    write_json(path, j);
}

void dump_stress(const fs::path& dir, const StressField& sig, const std::string& suffix) {
    dump_field(dir / ("sigma_xx" + suffix + ".apfc"), "sigma_xx" + suffix, sig.sxx);
    dump_field(dir / ("sigma_xy" + suffix + ".apfc"), "sigma_xy" + suffix, sig.sxy);
    dump_field(dir / ("sigma_yy" + suffix + ".apfc"), "sigma_yy" + suffix, sig.syy);
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

ComparisonReport run_single(const RunConfig& cfg, bool quiet, Profile* profile_out) {
    cfg.validate();
    const Grid2D grid = cfg.make_grid();
    const InclusionSpec inc = cfg.make_inclusion();
    const ReciprocalModeSet modes = triangular_mode_set(cfg.params.q0);
    const double phi = equilibrium_amplitude(cfg.params, 1.0, EquilibriumBranch::plus);

    const fs::path out(cfg.out_dir);
    fs::create_directories(out);

    const ScalarField beta = beta_field(grid, inc);
    AmplitudeState s = uniform_state(grid, cfg.params, beta, phi);
    Evolver ev(grid, modes, cfg.params);

    if (!quiet)
        std::printf("[apfc] grid %dx%d (%g x %g), R=%g a0, w=%g a0, eps*=%g\n", grid.nx, grid.ny,
                    grid.lx, grid.ly, cfg.radius_a0, cfg.width_a0, cfg.eigenstrain);

    StepHook hook;
    if (cfg.dump_every > 0 || cfg.dump_stress_every > 0) {
        long g = 0;
        if (cfg.dump_every > 0) g = cfg.dump_every;
        if (cfg.dump_stress_every > 0)
            g = g > 0 ? std::gcd(g, cfg.dump_stress_every) : cfg.dump_stress_every;
        hook.every = g;
        hook.fn = [&](const AmplitudeState& st, long step) {
            const std::string tag = "_step" + std::to_string(step);
            if (cfg.dump_every > 0 && step % cfg.dump_every == 0)
                for (int j = 0; j < ReciprocalModeSet::count; ++j) {
                    const std::string nm = "eta" + std::to_string(j + 1) + tag;
                    dump_field(out / (nm + ".apfc"), nm, st.etas[j]);
                }
            if (cfg.dump_stress_every > 0 && step % cfg.dump_stress_every == 0)
                dump_stress(out, stress_from_amplitudes(st, ev), tag);
        };
    }

    const RelaxationReport rr = ev.relax(s, cfg.solver, hook);

    const StressField sig = stress_from_amplitudes(s, ev);
    const EshelbyProblem prob = analytic_problem(cfg);
    const StressField ana = sample_analytic_stress(prob, grid);
    const ScalarField dist = signed_distance_field(grid, inc);
    const std::vector<unsigned char> bulk = bulk_mask(dist, inc.width);

    ComparisonReport rep;
    rep.converged = rr.converged;
    rep.steps = rr.steps_taken;
    rep.final_residual = rr.final_residual;
    rep.energy_final = rr.energy_history.back().second;
    rep.sxx_bulk = compare_fields(sig.sxx, ana.sxx, bulk);
    rep.sxy_bulk = compare_fields(sig.sxy, ana.sxy, bulk);
    rep.syy_bulk = compare_fields(sig.syy, ana.syy, bulk);

    double sum = 0.0;
    long count = 0;
    for (std::size_t i = 0; i < dist.size(); ++i)
        if (dist.values[i] < -3.0 * inc.width) {
            sum += sig.syy.values[i];
            ++count;
        }
    if (count > 0) {
        rep.interior_plateau = sum / static_cast<double>(count);
        rep.plateau_region = "d<-3w";
    } else {
        // Interface wider than the core: fall back to the center sample.
        const int ix = static_cast<int>(std::lround(inc.center[0] / grid.dx())) % grid.nx;
        const int iy = static_cast<int>(std::lround(inc.center[1] / grid.dy())) % grid.ny;
        rep.interior_plateau = sig.syy(ix, iy);
        rep.plateau_region = "center";
    }
    rep.interior_plateau_analytic = eshelby_stress(prob, prob.center).yy;

    Profile prof = centered_profile(sig.syy, inc.center[0], inc.center[1]);
    const Profile prof_ana = centered_profile(ana.syy, inc.center[0], inc.center[1]);
    std::vector<double> radii, vals, vals_ana;
    for (std::size_t i = 0; i < prof.coordinates.size(); ++i) {
        const double r = std::abs(prof.coordinates[i]);
        if (r >= 1.5 * inc.radius && r <= 4.0 * inc.radius) {
            radii.push_back(r);
            vals.push_back(prof.values[i]);
            vals_ana.push_back(prof_ana.values[i]);
        }
    }
    rep.exterior_decay_exponent = fit_power_law(radii, vals).exponent;
    rep.exterior_decay_exponent_analytic = fit_power_law(radii, vals_ana).exponent;

    rep.min_syy = *std::min_element(sig.syy.values.begin(), sig.syy.values.end());
    rep.max_syy = *std::max_element(sig.syy.values.begin(), sig.syy.values.end());
    rep.mean_syy = std::accumulate(sig.syy.values.begin(), sig.syy.values.end(), 0.0) /
                   static_cast<double>(sig.syy.size());
    rep.min_syy_normalized = inc.eigenstrain != 0.0 ? rep.min_syy / inc.eigenstrain : 0.0;
    rep.transition_width = transition_width_10_90(prof);
    rep.divsigma_rel_l2_bulk = divergence_residual(sig, ev.ops(), bulk);

    for (int j = 0; j < ReciprocalModeSet::count; ++j) {
        const std::string nm = "eta" + std::to_string(j + 1);
        dump_field(out / (nm + ".apfc"), nm, s.etas[j]);
    }
    dump_field(out / "beta.apfc", "beta", s.beta);
    dump_stress(out, sig, "");
    dump_stress(out, ana, "_analytic");
    write_profile_csv(out / "profile_sigma_yy.csv", prof, &prof_ana);
    {
        std::ofstream e(out / "energy.csv");
        e << "time,energy\n";
        e.precision(17);
        for (const auto& [t, en] : rr.energy_history) e << t << "," << en << "\n";
    }
    write_json(out / "report.json", report_json(rep));
    write_metadata(out / "metadata.json", cfg, rep);

    if (!quiet) {
        std::printf("[apfc] relaxed: steps=%ld converged=%s residual=%.3e energy=%.10g\n",
                    rep.steps, rep.converged ? "yes" : "no", rep.final_residual, rep.energy_final);
        std::printf("[apfc] plateau sigma_yy=%.6e (analytic %.6e, region %s)\n",
                    rep.interior_plateau, rep.interior_plateau_analytic,
                    rep.plateau_region.c_str());
        std::printf("[apfc] exterior decay exponent=%.3f (analytic %.3f)\n",
                    rep.exterior_decay_exponent, rep.exterior_decay_exponent_analytic);
        std::printf("[apfc] bulk rel L2: sxx=%.4g sxy=%.4g syy=%.4g, div residual=%.3e\n",
                    rep.sxx_bulk.rel_l2, rep.sxy_bulk.rel_l2, rep.syy_bulk.rel_l2,
                    rep.divsigma_rel_l2_bulk);
        std::printf("[apfc] artifacts -> %s\n", out.string().c_str());
    }

    if (profile_out) *profile_out = std::move(prof);
    return rep;
}

std::vector<ComparisonReport> run_sweep(const RunConfig& cfg, bool quiet) {
    cfg.validate();
    if (cfg.sweep_parameter == SweepParameter::none || cfg.sweep_values.empty())
        throw ConfigError("run_sweep: sweep.parameter and sweep.values must be set");
    const bool width_sweep = cfg.sweep_parameter == SweepParameter::width;

    const fs::path out(cfg.out_dir);
    fs::create_directories(out);

    std::vector<ComparisonReport> reports;
    std::vector<std::string> labels;
    std::vector<Profile> profiles;
    for (const double v : cfg.sweep_values) {
        RunConfig sub = cfg;
        sub.sweep_parameter = SweepParameter::none;
        sub.sweep_values.clear();
        std::string label;
        if (width_sweep) {
            sub.width_a0 = v;
            label = "w_" + format_value(v);
        } else {
            sub.eigenstrain = v;
            label = "eps_" + format_value(v);
            // Residual tolerance tracks the driving amplitude, otherwise small
            // eigenstrains stop before the elastic field develops.
            if (cfg.sweep_scale_tol && cfg.eigenstrain > 0.0 && v > 0.0)
                sub.solver.tol = cfg.solver.tol * (v / cfg.eigenstrain);
        }
        sub.out_dir = (out / label).string();
        if (!quiet) std::printf("[apfc] sweep %s\n", label.c_str());
        try {
            Profile prof;
            ComparisonReport rep = run_single(sub, quiet, &prof);
            rep.sweep_parameter = width_sweep ? "width" : "eigenstrain";
            rep.sweep_value = v;
            reports.push_back(rep);
            labels.push_back(label);
            profiles.push_back(std::move(prof));
        } catch (const std::exception& e) {
            std::fprintf(stderr, "[apfc] sweep member %s failed: %s\n", label.c_str(), e.what());
        }
    }

    {
        std::ofstream sums(out / "sweep_summary.csv");
        sums << "value,converged,steps,final_residual,interior_plateau,interior_plateau_analytic,"
                "plateau_region,transition_width_10_90,exterior_decay_exponent,min_syy,"
                "min_syy_normalized,syy_rel_l2_bulk,divsigma_rel_l2_bulk\n";
        sums.precision(17);
        for (const auto& r : reports)
            sums << r.sweep_value << "," << (r.converged ? 1 : 0) << "," << r.steps << ","
                 << r.final_residual << "," << r.interior_plateau << ","
                 << r.interior_plateau_analytic << "," << r.plateau_region << ","
                 << r.transition_width << "," << r.exterior_decay_exponent << "," << r.min_syy
                 << "," << r.min_syy_normalized << "," << r.syy_bulk.rel_l2 << ","
                 << r.divsigma_rel_l2_bulk << "\n";
    }
    if (!profiles.empty()) {
        std::ofstream pf(out / "sweep_profiles.csv");
        pf << "x";
        for (const auto& l : labels) pf << "," << l;
        pf << "\n";
        pf.precision(17);
        const std::size_t n = profiles.front().coordinates.size();
        for (std::size_t i = 0; i < n; ++i) {
            pf << profiles.front().coordinates[i];
            for (const auto& p : profiles) pf << "," << (i < p.values.size() ? p.values[i] : 0.0);
            pf << "\n";
        }
    }
    return reports;
}

void run_oracle(const RunConfig& cfg, bool quiet) {
    cfg.validate();
    const Grid2D grid = cfg.make_grid();
    const InclusionSpec inc = cfg.make_inclusion();
    const EshelbyProblem prob = analytic_problem(cfg);
    const StressField ana = sample_analytic_stress(prob, grid);

    const fs::path out(cfg.out_dir);
    fs::create_directories(out);
    dump_stress(out, ana, "_analytic");

    const Profile prof = centered_profile(ana.syy, inc.center[0], inc.center[1]);
    std::ofstream csv(out / "profile_sigma_yy_analytic.csv");
    csv << "x,sigma_yy_analytic\n";
    csv.precision(17);
    for (std::size_t i = 0; i < prof.coordinates.size(); ++i)
        csv << prof.coordinates[i] << "," << prof.values[i] << "\n";

    ordered_json j;
    j["version"] = project_version;
    j["config"] = cfg.resolved();
    j["problem"] = {{"radius", prob.radius},
                    {"eigenstrain", prob.eigenstrain},
                    {"lambda", prob.elastic.lambda},
                    {"mu", prob.elastic.mu},
                    {"nu", prob.elastic.nu},
                    {"interior_sigma", eshelby_stress(prob, prob.center).yy}};
    write_json(out / "metadata.json", j);
    if (!quiet) std::printf("[apfc] analytic fields -> %s\n", out.string().c_str());
}

}  // namespace apfc
