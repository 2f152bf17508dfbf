#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "apfc/field.hpp"
#include "apfc/stress.hpp"

namespace apfc {

struct LoadedField {
    std::string name;
    std::variant<ScalarField, ComplexField> data;

    bool is_complex() const { return std::holds_alternative<ComplexField>(data); }
};

// Binary dump: one text header line
//   APFCFIELD v1 <name> <nx> <ny> <lx> <ly> <real|complex>
// followed by row-major little-endian float64 samples (re,im pairs when
// complex). <name> must be a single whitespace-free token.
void dump_field(const std::filesystem::path& path, const std::string& name, const ScalarField& f);
void dump_field(const std::filesystem::path& path, const std::string& name, const ComplexField& f);
LoadedField load_field(const std::filesystem::path& path);

// "x,y,value" rows; intended for small fields.
void write_field_csv(const std::filesystem::path& path, const ScalarField& f);

// "x,sigma_yy_apfc[,sigma_yy_analytic]" rows.
void write_profile_csv(const std::filesystem::path& path, const Profile& apfc,
                       const Profile* analytic = nullptr);

}  // namespace apfc
