#include "apfc/io.hpp"

#include <bit>
#include <cctype>
#include <fstream>
#include <sstream>

#include "apfc/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "field dumps are little-endian; big-endian hosts are unsupported");

namespace apfc {

namespace {

void check_name(const std::string& name) {
    if (name.empty()) throw IoError("dump_field: empty field name");
    for (char c : name)
        if (std::isspace(static_cast<unsigned char>(c)))
            throw IoError("dump_field: field name must not contain whitespace");
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    return out;
}

void write_header(std::ofstream& out, const std::string& name, const Grid2D& g, bool complex) {
    std::ostringstream h;
    h.precision(17);
    h << "APFCFIELD v1 " << name << ' ' << g.nx << ' ' << g.ny << ' ' << g.lx << ' ' << g.ly << ' '
      << (complex ? "complex" : "real") << '\n';
    out << h.str();
}

}  // namespace

void dump_field(const std::filesystem::path& path, const std::string& name, const ScalarField& f) {
    check_name(name);
    auto out = open_out(path);
    write_header(out, name, f.grid, false);
    out.write(reinterpret_cast<const char*>(f.values.data()),
              static_cast<std::streamsize>(f.values.size() * sizeof(double)));
    if (!out) throw IoError("short write: " + path.string());
}

void dump_field(const std::filesystem::path& path, const std::string& name, const ComplexField& f) {
    check_name(name);
    auto out = open_out(path);
    write_header(out, name, f.grid, true);
    out.write(reinterpret_cast<const char*>(f.values.data()),
              static_cast<std::streamsize>(f.values.size() * 2 * sizeof(double)));
    if (!out) throw IoError("short write: " + path.string());
}

LoadedField load_field(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::string header;
    if (!std::getline(in, header)) throw IoError("missing header: " + path.string());

    std::istringstream hs(header);
    std::string magic, version, name, kind;
    int nx = 0, ny = 0;
    double lx = 0.0, ly = 0.0;
    hs >> magic >> version >> name >> nx >> ny >> lx >> ly >> kind;
    if (!hs || magic != "APFCFIELD" || version != "v1" || (kind != "real" && kind != "complex"))
        throw IoError("malformed APFCFIELD header: " + path.string());

    Grid2D grid;
    try {
        grid = Grid2D(nx, ny, lx, ly);
    } catch (const std::invalid_argument& e) {
        throw IoError(std::string("invalid grid in header: ") + e.what());
    }

    LoadedField lf;
    lf.name = name;
    if (kind == "real") {
        ScalarField f(grid);
        in.read(reinterpret_cast<char*>(f.values.data()),
                static_cast<std::streamsize>(f.values.size() * sizeof(double)));
        if (!in) throw IoError("truncated data: " + path.string());
        lf.data = std::move(f);
    } else {
        ComplexField f(grid);
        in.read(reinterpret_cast<char*>(f.values.data()),
                static_cast<std::streamsize>(f.values.size() * 2 * sizeof(double)));
        if (!in) throw IoError("truncated data: " + path.string());
        lf.data = std::move(f);
    }
    return lf;
}

void write_field_csv(const std::filesystem::path& path, const ScalarField& f) {
    auto out = open_out(path);
    out.precision(17);
    out << "x,y,value\n";
    for (int iy = 0; iy < f.grid.ny; ++iy)
        for (int ix = 0; ix < f.grid.nx; ++ix)
            out << ix * f.grid.dx() << ',' << iy * f.grid.dy() << ',' << f(ix, iy) << '\n';
    if (!out) throw IoError("short write: " + path.string());
}

void write_profile_csv(const std::filesystem::path& path, const Profile& apfc,
                       const Profile* analytic) {
    if (analytic && analytic->values.size() != apfc.values.size())
        throw IoError("write_profile_csv: profile lengths differ");
    auto out = open_out(path);
    out.precision(17);
    out << (analytic ? "x,sigma_yy_apfc,sigma_yy_analytic\n" : "x,sigma_yy_apfc\n");
    for (std::size_t i = 0; i < apfc.values.size(); ++i) {
        out << apfc.coordinates[i] << ',' << apfc.values[i];
        if (analytic) out << ',' << analytic->values[i];
        out << '\n';
    }
    if (!out) throw IoError("short write: " + path.string());
}

}  // namespace apfc
