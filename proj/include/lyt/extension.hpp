#pragma once

#include <optional>
#include <vector>

#include "lyt/cohomology.hpp"

namespace lyt
{

/// A short exact sequence 0 -> V -> E -> L -> 0 of modified Rota-Baxter
/// Lie-Yamaguti algebras with V an abelian ideal. E = total.algebra has
/// dimension n + m; projection is n x (n+m), inclusion is (n+m) x m.
struct AbelianExtension
{
    MRBLYAlgebra total;
    /// Basis indices of E spanning the ideal, when it is spanned by basis
    /// vectors (always the case for extensions built here: n..n+m-1).
    std::vector<std::size_t> ideal;
    Matrix projection;
    Matrix inclusion;

    std::size_t dim_base() const { return projection.rows(); }
    std::size_t dim_ideal() const { return inclusion.cols(); }

    friend bool operator==(const AbelianExtension &, const AbelianExtension &) = default;
};

/// ((nu, psi), chi): nu and psi in the ly part, chi (m x n) in the op part.
using ExtensionCocycle = TotalCochain2;

/// Everything an extension must satisfy: E passes the LY axioms and the
/// modified Rota-Baxter check, p i = 0, p is onto, i is one-to-one, p is a
/// morphism onto the base induced on E / V, brackets with two or more ideal
/// arguments vanish, and the ideal is stable under the operator.
AxiomReport check_extension(const AbelianExtension &ext,
                            std::size_t max_violations = kDefaultMaxViolations);

/// The cocycle test used by the extension functions: d2(c) = 0 and
/// aux2(c) = 0. Violations name the flat row of the offending coordinate.
AxiomReport check_extension_cocycle(const MrbContext &ctx, const ExtensionCocycle &c,
                                    std::size_t max_violations = kDefaultMaxViolations);

/// L + V with the brackets twisted by (nu, psi) and operator
/// [[R, 0], [chi, R_V]]. Throws CheckFailure when c is not a cocycle.
AbelianExtension extension_from_cocycle(const MrbContext &ctx, const ExtensionCocycle &c);

struct SectionData
{
    /// The base (L, R) recovered through the section.
    MRBLYAlgebra base;
    Representation rep;
    ExtensionCocycle cocycle;
};

/// s is (n+m) x n with p s = id. Throws InputError when s is not a section
/// and CheckFailure when ext fails check_extension.
SectionData cocycle_from_section(const AbelianExtension &ext, const Matrix &s);

/// The canonical section x -> x + 0 of an extension built by
/// extension_from_cocycle.
Matrix canonical_section(const AbelianExtension &ext);

/// lambda = (s1 - s2) read in V. Throws InternalError unless
/// cocycle(s1) - cocycle(s2) = d1(lambda) exactly.
Cochain1 sections_cohomologous(const AbelianExtension &ext, const Matrix &s1, const Matrix &s2);

/// When c1 - c2 = d1(lambda) for some lambda, the matrix of
/// phi(x + u) = x + lambda(x) + u, verified to be an isomorphism of the two
/// extensions commuting with the projections and inclusions. nullopt when
/// the classes differ. Throws CheckFailure when either is not a cocycle.
std::optional<Matrix> extensions_equivalent(const MrbContext &ctx, const ExtensionCocycle &c1,
                                            const ExtensionCocycle &c2);

/// Whether phi maps the brackets and operator of `from` onto those of `to`.
AxiomReport check_homomorphism(const MRBLYAlgebra &from, const MRBLYAlgebra &to, const Matrix &phi,
                               std::size_t max_violations = kDefaultMaxViolations);

} // namespace lyt
