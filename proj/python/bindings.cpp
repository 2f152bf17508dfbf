#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "apfc/dynamics.hpp"
#include "apfc/eshelby.hpp"
#include "apfc/harness.hpp"
#include "apfc/inclusion.hpp"
#include "apfc/io.hpp"
#include "apfc/model.hpp"
#include "apfc/state.hpp"

namespace py = pybind11;
using namespace apfc;

namespace {

// Fields are row-major with iy as the slow index, so numpy shape is (ny, nx).
py::array_t<double> to_numpy(const ScalarField& f) {
    py::array_t<double> a({f.grid.ny, f.grid.nx});
    std::copy(f.values.begin(), f.values.end(), a.mutable_data());
    return a;
}

py::array_t<std::complex<double>> to_numpy(const ComplexField& f) {
    py::array_t<std::complex<double>> a({f.grid.ny, f.grid.nx});
    std::copy(f.values.begin(), f.values.end(), a.mutable_data());
    return a;
}

py::dict report_dict(const ComparisonReport& r) {
    py::dict d;
    d["converged"] = r.converged;
    d["steps"] = r.steps;
    d["final_residual"] = r.final_residual;
    d["energy_final"] = r.energy_final;
    d["sxx_rel_l2_bulk"] = r.sxx_bulk.rel_l2;
    d["sxy_rel_l2_bulk"] = r.sxy_bulk.rel_l2;
    d["syy_rel_l2_bulk"] = r.syy_bulk.rel_l2;
    d["interior_plateau"] = r.interior_plateau;
    d["interior_plateau_analytic"] = r.interior_plateau_analytic;
    d["plateau_region"] = r.plateau_region;
    d["exterior_decay_exponent"] = r.exterior_decay_exponent;
    d["exterior_decay_exponent_analytic"] = r.exterior_decay_exponent_analytic;
    d["min_syy"] = r.min_syy;
    d["max_syy"] = r.max_syy;
    d["mean_syy"] = r.mean_syy;
    d["min_syy_normalized"] = r.min_syy_normalized;
    d["transition_width_10_90"] = r.transition_width;
    d["divsigma_rel_l2_bulk"] = r.divsigma_rel_l2_bulk;
    return d;
}

py::dict run_config(RunConfig cfg, const std::optional<std::string>& out_dir) {
    if (out_dir) cfg.out_dir = *out_dir;
    return report_dict(run_single(cfg, /*quiet=*/true));
}

}  // namespace

PYBIND11_MODULE(_apfc, m) {
    m.doc() = "Amplitude phase-field-crystal solver with an analytic elastic-inclusion oracle";
    m.attr("__version__") = project_version;
    m.attr("stress_normalization") = stress_normalization;

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<>())
        .def_readwrite("b0x", &ModelParams::b0x)
        .def_readwrite("delta_b0", &ModelParams::delta_b0)
        .def_readwrite("tau", &ModelParams::tau)
        .def_readwrite("v", &ModelParams::v)
        .def_readwrite("q0", &ModelParams::q0)
        .def("validate", &ModelParams::validate);

    py::class_<ReciprocalModeSet>(m, "ReciprocalModeSet")
        .def_readonly("modes", &ReciprocalModeSet::modes)
        .def_readonly("a0", &ReciprocalModeSet::a0)
        .def_readonly("q0", &ReciprocalModeSet::q0);
    m.def("triangular_mode_set", &triangular_mode_set, py::arg("q0") = 1.0);

    m.def(
        "equilibrium_amplitude",
        [](const ModelParams& p, double beta, const std::string& branch) {
            return equilibrium_amplitude(
                p, beta, branch == "minus" ? EquilibriumBranch::minus : EquilibriumBranch::plus);
        },
        py::arg("params") = ModelParams{}, py::arg("beta") = 1.0, py::arg("branch") = "plus");
    m.def("phase_thresholds", &phase_thresholds, py::arg("params") = ModelParams{},
          py::arg("beta") = 1.0);

    py::class_<IsotropicElasticity>(m, "IsotropicElasticity")
        .def_readonly("lambda_", &IsotropicElasticity::lambda)
        .def_readonly("mu", &IsotropicElasticity::mu)
        .def_readonly("nu", &IsotropicElasticity::nu)
        .def_readonly("e_mod", &IsotropicElasticity::e_mod)
        .def_static("from_lame", &IsotropicElasticity::from_lame, py::arg("lambda_"),
                    py::arg("mu"));
    m.def("lame_constants", &lame_constants, py::arg("phi"));

    py::class_<Grid2D>(m, "Grid2D")
        .def(py::init<int, int, double, double>(), py::arg("nx"), py::arg("ny"), py::arg("lx"),
             py::arg("ly"))
        .def_readonly("nx", &Grid2D::nx)
        .def_readonly("ny", &Grid2D::ny)
        .def_readonly("lx", &Grid2D::lx)
        .def_readonly("ly", &Grid2D::ly)
        .def("dx", &Grid2D::dx)
        .def("dy", &Grid2D::dy);

    py::class_<InclusionSpec>(m, "InclusionSpec")
        .def(py::init<>())
        .def_readwrite("center", &InclusionSpec::center)
        .def_readwrite("radius", &InclusionSpec::radius)
        .def_readwrite("width", &InclusionSpec::width)
        .def_readwrite("eigenstrain", &InclusionSpec::eigenstrain);
    m.def("chi_w", &chi_w, py::arg("d"), py::arg("w"));
    m.def(
        "beta_field",
        [](const Grid2D& g, const InclusionSpec& inc) { return to_numpy(beta_field(g, inc)); },
        py::arg("grid"), py::arg("inclusion"));
    m.def(
        "signed_distance_field",
        [](const Grid2D& g, const InclusionSpec& inc) {
            return to_numpy(signed_distance_field(g, inc));
        },
        py::arg("grid"), py::arg("inclusion"));

    py::class_<EshelbyProblem>(m, "EshelbyProblem")
        .def(py::init<>())
        .def_readwrite("radius", &EshelbyProblem::radius)
        .def_readwrite("eigenstrain", &EshelbyProblem::eigenstrain)
        .def_readwrite("elastic", &EshelbyProblem::elastic)
        .def_readwrite("center", &EshelbyProblem::center);
    m.def(
        "eshelby_stress",
        [](const EshelbyProblem& p, const std::array<double, 2>& pt) {
            const SymTensor2 s = eshelby_stress(p, pt);
            return py::make_tuple(s.xx, s.xy, s.yy);
        },
        py::arg("problem"), py::arg("point"), "Stress (xx, xy, yy) at a point");
    m.def(
        "lame_circular_reference",
        [](const EshelbyProblem& p, const std::array<double, 2>& pt) {
            const SymTensor2 s = lame_circular_reference(p, pt);
            return py::make_tuple(s.xx, s.xy, s.yy);
        },
        py::arg("problem"), py::arg("point"));

    m.def(
        "simulate",
        [](const std::string& config_text, const std::optional<std::string>& out_dir) {
            return run_config(RunConfig::from_string(config_text), out_dir);
        },
        py::arg("config_text"), py::arg("out_dir") = std::nullopt,
        "Relax an inclusion run described by flat key=value text; returns the report");
    m.def(
        "simulate_file",
        [](const std::string& path, const std::optional<std::string>& out_dir) {
            return run_config(RunConfig::from_file(path), out_dir);
        },
        py::arg("config_path"), py::arg("out_dir") = std::nullopt);

    m.def(
        "load_field",
        [](const std::string& path) -> py::tuple {
            const LoadedField f = apfc::load_field(path);
            if (f.is_complex())
                return py::make_tuple(f.name, to_numpy(std::get<ComplexField>(f.data)));
            return py::make_tuple(f.name, to_numpy(std::get<ScalarField>(f.data)));
        },
        py::arg("path"), "Load a binary field dump as (name, array)");
}
