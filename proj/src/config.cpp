#include "apfc/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "apfc/errors.hpp"

namespace apfc {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' expects a number, got '" + v + "'");
    }
}

long parse_long(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long d = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' expects an integer, got '" + v + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "on" || v == "1") return true;
    if (v == "false" || v == "off" || v == "0") return false;
    throw ConfigError("config: key '" + key + "' expects a boolean, got '" + v + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(key, item));
    }
    if (out.empty()) throw ConfigError("config: key '" + key + "' expects a non-empty list");
    return out;
}

}  // namespace

RunConfig RunConfig::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return from_string(buf.str());
}

RunConfig RunConfig::from_string(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (val.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty value for " + key);

        if (key == "grid.box_a0") cfg.box_a0 = parse_double(key, val);
        else if (key == "grid.box_y_a0") cfg.box_y_a0 = parse_double(key, val);
        else if (key == "grid.cells_per_a0") cfg.cells_per_a0 = static_cast<int>(parse_long(key, val));
        else if (key == "model.b0x") cfg.params.b0x = parse_double(key, val);
        else if (key == "model.delta_b0") cfg.params.delta_b0 = parse_double(key, val);
        else if (key == "model.tau") cfg.params.tau = parse_double(key, val);
        else if (key == "model.v") cfg.params.v = parse_double(key, val);
        else if (key == "model.q0") cfg.params.q0 = parse_double(key, val);
        else if (key == "inclusion.radius_a0") cfg.radius_a0 = parse_double(key, val);
        else if (key == "inclusion.width_a0") cfg.width_a0 = parse_double(key, val);
        else if (key == "inclusion.eigenstrain") cfg.eigenstrain = parse_double(key, val);
        else if (key == "inclusion.center_x_a0") cfg.center_x_a0 = parse_double(key, val);
        else if (key == "inclusion.center_y_a0") cfg.center_y_a0 = parse_double(key, val);
        else if (key == "solver.dt") cfg.solver.dt = parse_double(key, val);
        else if (key == "solver.tol") cfg.solver.tol = parse_double(key, val);
        else if (key == "solver.max_steps") cfg.solver.max_steps = parse_long(key, val);
        else if (key == "solver.energy_check_every")
            cfg.solver.energy_check_every = static_cast<int>(parse_long(key, val));
        else if (key == "solver.dealias") cfg.solver.dealias = parse_bool(key, val);
        else if (key == "output.dir") cfg.out_dir = val;
        else if (key == "output.dump_every") cfg.dump_every = parse_long(key, val);
        else if (key == "output.dump_stress_every") cfg.dump_stress_every = parse_long(key, val);
        else if (key == "sweep.parameter") {
            if (val == "none") cfg.sweep_parameter = SweepParameter::none;
            else if (val == "width") cfg.sweep_parameter = SweepParameter::width;
            else if (val == "eigenstrain") cfg.sweep_parameter = SweepParameter::eigenstrain;
            else throw ConfigError("config: sweep.parameter must be none|width|eigenstrain");
        } else if (key == "sweep.values") cfg.sweep_values = parse_list(key, val);
        else if (key == "sweep.scale_tol") cfg.sweep_scale_tol = parse_bool(key, val);
        else throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

double RunConfig::a0() const { return triangular_mode_set(params.q0).a0; }

Grid2D RunConfig::make_grid() const {
    const double ax = box_a0;
    const double ay = box_y_a0.value_or(box_a0);
    const int nx = static_cast<int>(std::lround(ax * cells_per_a0));
    const int ny = static_cast<int>(std::lround(ay * cells_per_a0));
    return Grid2D(nx, ny, ax * a0(), ay * a0());
}

InclusionSpec RunConfig::make_inclusion() const {
    InclusionSpec inc;
    const double a = a0();
    inc.center = {center_x_a0.value_or(box_a0 / 2.0) * a,
                  center_y_a0.value_or(box_y_a0.value_or(box_a0) / 2.0) * a};
    inc.radius = radius_a0 * a;
    inc.width = width_a0 * a;
    inc.eigenstrain = eigenstrain;
    return inc;
}

void RunConfig::validate() const {
    params.validate();
    solver.validate();
    if (!(box_a0 > 0.0)) throw ConfigError("config: grid.box_a0 must be positive");
    if (cells_per_a0 < 1) throw ConfigError("config: grid.cells_per_a0 must be >= 1");
    make_grid();        // throws on invalid sizes
    make_inclusion().validate();
    if (sweep_parameter != SweepParameter::none && sweep_values.empty())
        throw ConfigError("config: sweep.values required when sweep.parameter is set");
}

std::map<std::string, std::string> RunConfig::resolved() const {
    auto num = [](double v) {
        std::ostringstream o;
        o.precision(17);
        o << v;
        return o.str();
    };
    std::map<std::string, std::string> m;
    m["grid.box_a0"] = num(box_a0);
    m["grid.box_y_a0"] = num(box_y_a0.value_or(box_a0));
    m["grid.cells_per_a0"] = std::to_string(cells_per_a0);
    m["model.b0x"] = num(params.b0x);
    m["model.delta_b0"] = num(params.delta_b0);
    m["model.tau"] = num(params.tau);
    m["model.v"] = num(params.v);
    m["model.q0"] = num(params.q0);
    m["inclusion.radius_a0"] = num(radius_a0);
    m["inclusion.width_a0"] = num(width_a0);
    m["inclusion.eigenstrain"] = num(eigenstrain);
    m["inclusion.center_x_a0"] = num(center_x_a0.value_or(box_a0 / 2.0));
    m["inclusion.center_y_a0"] = num(center_y_a0.value_or(box_y_a0.value_or(box_a0) / 2.0));
    m["solver.dt"] = num(solver.dt);
    m["solver.tol"] = num(solver.tol);
    m["solver.max_steps"] = std::to_string(solver.max_steps);
    m["solver.energy_check_every"] = std::to_string(solver.energy_check_every);
    m["solver.dealias"] = solver.dealias ? "true" : "false";
    m["output.dir"] = out_dir;
    m["output.dump_every"] = std::to_string(dump_every);
    m["output.dump_stress_every"] = std::to_string(dump_stress_every);
    switch (sweep_parameter) {
        case SweepParameter::none: m["sweep.parameter"] = "none"; break;
        case SweepParameter::width: m["sweep.parameter"] = "width"; break;
        case SweepParameter::eigenstrain: m["sweep.parameter"] = "eigenstrain"; break;
    }
    if (!sweep_values.empty()) {
        std::ostringstream o;
        o.precision(17);
        for (std::size_t i = 0; i < sweep_values.size(); ++i)
            o << (i ? "," : "") << sweep_values[i];
        m["sweep.values"] = o.str();
    }
    m["sweep.scale_tol"] = sweep_scale_tol ? "true" : "false";
    return m;
}

}  // namespace apfc
