#include <complex>
#include <cstdio>
#include <string>
#include <variant>

#include "CLI11.hpp"

#include "apfc/harness.hpp"
#include "apfc/io.hpp"

namespace {

// Relative L2 and max-abs difference of two dumps of the same kind and grid.
int compare_dumps(const std::string& path_a, const std::string& path_b, bool quiet) {
    const apfc::LoadedField a = apfc::load_field(path_a);
    const apfc::LoadedField b = apfc::load_field(path_b);
    if (a.is_complex() != b.is_complex()) {
        std::fprintf(stderr, "error: dumps hold different kinds (real vs complex)\n");
        return 2;
    }

    double diff2 = 0.0, ref2 = 0.0, dmax = 0.0;
    apfc::Grid2D ga, gb;
    if (a.is_complex()) {
        const auto& fa = std::get<apfc::ComplexField>(a.data);
        const auto& fb = std::get<apfc::ComplexField>(b.data);
        ga = fa.grid;
        gb = fb.grid;
        if (ga == gb)
            for (std::size_t i = 0; i < fa.size(); ++i) {
                const double d = std::abs(fa.values[i] - fb.values[i]);
                diff2 += d * d;
                ref2 += std::norm(fb.values[i]);
                dmax = std::max(dmax, d);
            }
    } else {
        const auto& fa = std::get<apfc::ScalarField>(a.data);
        const auto& fb = std::get<apfc::ScalarField>(b.data);
        ga = fa.grid;
        gb = fb.grid;
        if (ga == gb)
            for (std::size_t i = 0; i < fa.size(); ++i) {
                const double d = std::abs(fa.values[i] - fb.values[i]);
                diff2 += d * d;
                ref2 += fb.values[i] * fb.values[i];
                dmax = std::max(dmax, d);
            }
    }
    if (!(ga == gb)) {
        std::fprintf(stderr, "error: grid mismatch (%dx%d vs %dx%d)\n", ga.nx, ga.ny, gb.nx,
                     gb.ny);
        return 2;
    }
    const double rel = ref2 > 0.0 ? std::sqrt(diff2 / ref2) : 0.0;
    if (!quiet)
        std::printf("%s vs %s (%dx%d)\n", a.name.c_str(), b.name.c_str(), ga.nx, ga.ny);
    std::printf("rel_l2=%.17g max_abs_diff=%.17g%s\n", rel, dmax,
                ref2 > 0.0 ? "" : " (reference is exactly zero)");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Amplitude phase-field-crystal simulation of a strained circular inclusion"};
    app.require_subcommand(1);

    std::string config_path, out_dir, dump_a, dump_b;
    long dump_every = -1;
    bool quiet = false;

    auto add_common = [&](CLI::App* sub, bool with_dump) {
        sub->add_option("config", config_path, "configuration file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--out", out_dir, "output directory (overrides output.dir)");
        if (with_dump)
            sub->add_option("--dump-every", dump_every,
                            "amplitude checkpoint cadence in steps (0 = final only)");
        sub->add_flag("--quiet", quiet, "suppress progress output");
    };

    CLI::App* sim = app.add_subcommand(
        "simulate", "relax one configuration and compare against the analytic solution");
    add_common(sim, true);
    CLI::App* swp = app.add_subcommand("sweep", "run the configured parameter sweep");
    add_common(swp, true);
    CLI::App* orc = app.add_subcommand("oracle", "sample the analytic stress fields only");
    add_common(orc, false);
    CLI::App* cmp = app.add_subcommand("compare", "relative L2 difference of two field dumps");
    cmp->add_option("dumpA", dump_a, "first dump")->required()->check(CLI::ExistingFile);
    cmp->add_option("dumpB", dump_b, "reference dump")->required()->check(CLI::ExistingFile);
    cmp->add_flag("--quiet", quiet, "suppress extra output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmp->parsed()) return compare_dumps(dump_a, dump_b, quiet);

        apfc::RunConfig cfg = apfc::RunConfig::from_file(config_path);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (dump_every >= 0) cfg.dump_every = dump_every;

        if (sim->parsed()) {
            const apfc::ComparisonReport rep = apfc::run_single(cfg, quiet);
            if (!rep.converged)
                std::fprintf(stderr, "warning: relaxation did not converge (residual %.3e)\n",
                             rep.final_residual);
        } else if (swp->parsed()) {
            apfc::run_sweep(cfg, quiet);
        } else {
            apfc::run_oracle(cfg, quiet);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
