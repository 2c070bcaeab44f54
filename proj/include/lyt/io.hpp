#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "lyt/deformation.hpp"
#include "lyt/extension.hpp"

namespace lyt::io
{

using json = nlohmann::json;

inline constexpr const char *kSchemaVersion = "1";

// Scalars are JSON integers when they fit in int64, otherwise "p/q" strings.
// Parsing accepts integers and strings in lowest terms, never floats.
json to_json(const Scalar &s);
Scalar scalar_from_json(const json &j, const std::string &where);

json to_json(const Vector &v);
Vector vector_from_json(const json &j, std::size_t len, const std::string &where);

/// {"rows", "cols", "entries": row-major array of arrays}.
json to_json(const Matrix &m);
Matrix matrix_from_json(const json &j, const std::string &where);

/// {"dim", "binary": [{"i","j","value"}], "ternary": [{"i","j","k","value"}]},
/// only nonzero entries with i < j, lexicographic.
json to_json(const LYAlgebra &a);
LYAlgebra algebra_from_json(const json &j);

/// {"dimV", "rho", "theta", "D", "rv"?}. "D" is optional on input (solved
/// from R1 when missing) and always written.
json to_json(const Representation &rep);
Representation representation_from_json(const json &j, const LYAlgebra &a);

/// Cochain files: {"degree", "dim", "dimV", "basis_order", "f", "g"?, "op"?}.
/// Degree 1: "f"[i] is h(e_i). Degree 2: "f"[w] is f at the w-th pair i<j and
/// "g"[w][k] is g(e_i, e_j, e_k); "op" carries the operator part of a total
/// cochain as a matrix (m x n).
json to_json(const Cochain1 &h);
json to_json(const Cochain2 &c);
json to_json(const TotalCochain2 &c);

struct CochainFile
{
    int degree = 1;
    Cochain1 h;
    Cochain2 c;
    std::optional<Matrix> op;

    TotalCochain2 total() const;
};
CochainFile cochain_from_json(const json &j, std::size_t n, std::size_t m);

/// {"F1": [w] -> vector, "G1": [w][k] -> vector, "R1": matrix}.
json to_json(const Infinitesimal &inf);
Infinitesimal infinitesimal_from_json(const json &j, std::size_t n);

/// Algebra file of the total algebra plus "operator", "ideal",
/// "projection", "inclusion" and an optional "section".
json to_json(const AbelianExtension &ext, const std::optional<Matrix> &section = std::nullopt);
struct ExtensionFile
{
    AbelianExtension ext;
    std::optional<Matrix> section;
};
ExtensionFile extension_from_json(const json &j);

json to_json(const Violation &v);
json to_json(const AxiomReport &r);
json to_json(const ComplexReport &r);

/// Throws InputError when the file is missing or not valid JSON.
json read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, const json &j);
/// Sorted keys, two-space indent, trailing newline.
std::string canonical(const json &j);

} // namespace lyt::io
