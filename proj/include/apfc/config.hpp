#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apfc/dynamics.hpp"
#include "apfc/grid.hpp"
#include "apfc/inclusion.hpp"
#include "apfc/model.hpp"

namespace apfc {

enum class SweepParameter { none, width, eigenstrain };

// Flat "section.key = value" configuration. Lengths are given in units of
// the lattice spacing a0 and converted on materialization.
struct RunConfig {
    // grid
    double box_a0 = 100.0;
    std::optional<double> box_y_a0;  // defaults to box_a0
    int cells_per_a0 = 4;

    ModelParams params;

    // inclusion (center defaults to the box center)
    double radius_a0 = 10.0;
    double width_a0 = 1.0;
    double eigenstrain = 0.01;
    std::optional<double> center_x_a0;
    std::optional<double> center_y_a0;

    SolverConfig solver;

    // outputs
    std::string out_dir = "out";
    long dump_every = 0;         // 0: final state only
    long dump_stress_every = 0;  // stress at checkpoints; 0: steady state only

    // sweep
    SweepParameter sweep_parameter = SweepParameter::none;
    std::vector<double> sweep_values;  // a0 units for width, plain for eigenstrain
    bool sweep_scale_tol = true;       // eigenstrain sweeps scale tol with the value

    static RunConfig from_file(const std::filesystem::path& path);
    static RunConfig from_string(const std::string& text);

    double a0() const;
    Grid2D make_grid() const;
    InclusionSpec make_inclusion() const;

    void validate() const;

    // Resolved key/value view (for metadata records).
    std::map<std::string, std::string> resolved() const;
};

}  // namespace apfc
