#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "lyt/matrix.hpp"

namespace lyt
{

/// Two independent exact elimination routes. Cohomology dimensions are
/// computed with either and cross-checked against the other.
enum class RankStrategy
{
    FractionFree,    ///< Bareiss elimination on an integer-scaled copy.
    RationalEchelon, ///< Gauss-Jordan over the rationals.
};

std::string_view to_string(RankStrategy s);

struct Echelon
{
    Matrix reduced;                  ///< reduced row echelon form
    std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix &m, RankStrategy strategy = RankStrategy::FractionFree);

/// Basis of {v : m v = 0}, one vector per free column of the echelon form.
std::vector<Vector> kernel_basis(const Matrix &m);

/// Some x with m x = b, or empty when the system is inconsistent.
std::optional<Vector> solve(const Matrix &m, const Vector &b);

/// True when v lies in the column span of m. Uses fraction-free rank
/// comparison, independent of `solve`.
bool in_column_span(const Matrix &m, const Vector &v);

} // namespace lyt
