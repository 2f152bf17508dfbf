#pragma once

#include <string>
#include <vector>

#include "apfc/config.hpp"
#include "apfc/eshelby.hpp"
#include "apfc/spectral.hpp"
#include "apfc/stress.hpp"

namespace apfc {

inline constexpr const char* project_version = "1.0.0";

struct CompareResult {
    double rel_l2 = 0.0;   // ||a-b||_2 / ||b||_2 over the mask
    double abs_l2 = 0.0;   // ||a-b||_2 over the mask
    bool exact_zero_reference = false;  // ||b||_2 = 0 on the mask
};

// Relative L2 error of a against reference b over cells with mask != 0.
CompareResult compare_fields(const ScalarField& a, const ScalarField& b,
                             const std::vector<unsigned char>& mask);

struct PowerFit {
    double exponent = 0.0;   // least-squares slope of log|v| vs log r
    double amplitude = 0.0;  // exp(intercept)
    int points = 0;
};

// Log-log fit of |values| against radii; pairs with r <= 0 or |v| = 0 are
// skipped. Degenerate inputs (< 2 usable points) return a zero fit.
PowerFit fit_power_law(const std::vector<double>& radii, const std::vector<double>& values);

// 10-90% rise width of the profile between its center value and the outer
// extremum, averaged over both sides. Coordinates must be centered on the
// inclusion (minimum image).
double transition_width_10_90(const Profile& centered);

// ||(div sigma) . mask||_2 / ||sigma . mask||_2 with spectral derivatives.
double divergence_residual(const StressField& sigma, const SpectralOps& ops,
                           const std::vector<unsigned char>& mask);

struct ComparisonReport {
    bool converged = false;
    long steps = 0;
    double final_residual = 0.0;
    double energy_final = 0.0;

    // Field-vs-oracle errors over the bulk region |d| > 3w.
    CompareResult sxx_bulk;
    CompareResult sxy_bulk;
    CompareResult syy_bulk;

    double interior_plateau = 0.0;  // mean sigma_yy over d < -3w
    std::string plateau_region = "d<-3w";  // "center" when 3w >= R leaves no core
    double interior_plateau_analytic = 0.0;

    // Power-law decay of |sigma_yy| along the x axis, r in [1.5R, 4R].
    double exterior_decay_exponent = 0.0;
    double exterior_decay_exponent_analytic = 0.0;

    double min_syy = 0.0;
    double max_syy = 0.0;
    double mean_syy = 0.0;
    double min_syy_normalized = 0.0;  // min sigma_yy / eps*, 0 when eps* = 0

    double transition_width = 0.0;  // 10-90% width of sigma_yy(x, y_c)

    double divsigma_rel_l2_bulk = 0.0;

    std::string sweep_parameter = "none";
    double sweep_value = 0.0;
};

// Relax from the uniform state, compute stress, sample the analytic oracle on
// the same grid, and write dumps + profile CSV + report.json + metadata.json
// into cfg.out_dir. Non-convergence is reported, not thrown. When profile_out
// is set it receives the centered sigma_yy(x, y_c) profile.
ComparisonReport run_single(const RunConfig& cfg, bool quiet = false,
                            Profile* profile_out = nullptr);

// One run per sweep value in a per-value subdirectory, plus combined
// sweep_summary.csv and sweep_profiles.csv. Failed members are skipped.
std::vector<ComparisonReport> run_sweep(const RunConfig& cfg, bool quiet = false);

// Oracle-only sampling: writes analytic stress dumps and profile for the
// config's grid and inclusion without running the solver.
void run_oracle(const RunConfig& cfg, bool quiet = false);

// Shared helpers used by run_single and the CLI.
EshelbyProblem analytic_problem(const RunConfig& cfg);
std::vector<unsigned char> bulk_mask(const ScalarField& distance, double width);
Profile centered_profile(const ScalarField& f, double center_x, double center_y);

}  // namespace apfc
