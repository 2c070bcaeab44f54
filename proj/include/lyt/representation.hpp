#pragma once

#include <optional>
#include <vector>

#include "lyt/algebra.hpp"

namespace lyt
{

/// A Lie-Yamaguti algebra together with a (modified Rota-Baxter) operator.
struct MRBLYAlgebra
{
    LYAlgebra algebra;
    LinearOperator op;

    friend bool operator==(const MRBLYAlgebra &, const MRBLYAlgebra &) = default;
};

/// Action data (rho, theta, D) of an algebra of dimension n on a space V of
/// dimension m, plus an optional operator R_V on V.
///
/// rho(i) is the m x m matrix of rho(e_i); theta(i, j) and D(i, j) are the
/// matrices of theta(e_i, e_j) and D(e_i, e_j). D is stored, not derived, so
/// that module data coming from extensions keeps its own D; R1 is then a
/// check. Construction never validates the axioms.
class Representation
{
public:
    Representation() = default;
    Representation(LYAlgebra algebra, std::size_t dim_v, std::vector<Matrix> rho,
                   std::vector<Matrix> theta, std::vector<Matrix> d, std::optional<Matrix> rv);

    const LYAlgebra &algebra() const { return algebra_; }
    std::size_t dim() const { return algebra_.dim(); }
    std::size_t dim_v() const { return dim_v_; }

    const Matrix &rho(std::size_t i) const { return rho_[i]; }
    const Matrix &theta(std::size_t i, std::size_t j) const { return theta_[i * dim() + j]; }
    const Matrix &d(std::size_t i, std::size_t j) const { return d_[i * dim() + j]; }
    const std::optional<Matrix> &rv() const { return rv_; }
    /// Throws InputError when R_V is absent.
    const Matrix &require_rv() const;

    const std::vector<Matrix> &rho_list() const { return rho_; }
    const std::vector<Matrix> &theta_list() const { return theta_; }
    const std::vector<Matrix> &d_list() const { return d_; }

    /// Linear / bilinear extensions to arbitrary vectors.
    Matrix rho_of(std::span<const Scalar> x) const;
    Matrix theta_of(std::span<const Scalar> x, std::span<const Scalar> y) const;
    Matrix d_of(std::span<const Scalar> x, std::span<const Scalar> y) const;

    Representation with_rv(std::optional<Matrix> rv) const;

    friend bool operator==(const Representation &, const Representation &) = default;

private:
    LYAlgebra algebra_;
    std::size_t dim_v_ = 0;
    std::vector<Matrix> rho_;
    std::vector<Matrix> theta_;
    std::vector<Matrix> d_;
    std::optional<Matrix> rv_;
};

/// When `d` is omitted it is solved from R1:
/// D(x,y) = theta(y,x) - theta(x,y) - rho([x,y]) + rho(x)rho(y) - rho(y)rho(x).
Representation make_representation(const LYAlgebra &a, std::size_t dim_v, std::vector<Matrix> rho,
                                   std::vector<Matrix> theta,
                                   std::optional<std::vector<Matrix>> d = std::nullopt,
                                   std::optional<Matrix> rv = std::nullopt);

Representation zero_representation(const LYAlgebra &a, std::size_t dim_v,
                                   std::optional<Matrix> rv = std::nullopt);

/// R1-R7 and R6' on every basis tuple; violations are reported per basis
/// vector u of V (last index of the tuple).
AxiomReport check_representation(const Representation &rep,
                                 std::size_t max_violations = kDefaultMaxViolations);

/// The three compatibility identities between R, R_V and rho / theta / D.
/// Throws InputError when R_V is missing.
AxiomReport check_mrb_representation(const Representation &rep, const LinearOperator &r,
                                     std::size_t max_violations = kDefaultMaxViolations);

/// Weight -1 analogue; R_V plays the role of T_V.
AxiomReport check_rb_m1_representation(const Representation &rep, const LinearOperator &t,
                                       std::size_t max_violations = kDefaultMaxViolations);

/// Everything a modified Rota-Baxter representation needs: R is modified
/// Rota-Baxter on the algebra, the module axioms hold, and R_V is compatible.
AxiomReport validate_mrb_representation(const Representation &rep, const LinearOperator &r,
                                        std::size_t max_violations = kDefaultMaxViolations);

/// rho(x) = ad x, theta(x,y)z = {z,x,y}, D(x,y)z = {x,y,z}.
/// Throws CheckFailure when the algebra fails its axioms.
Representation adjoint_representation(const LYAlgebra &a);
/// Adjoint representation with R_V = R. Throws CheckFailure when R is not
/// modified Rota-Baxter.
Representation adjoint_mrb_representation(const LYAlgebra &a, const LinearOperator &r);

/// (rho_R, theta_R, D_R, R_V) over the descendant algebra L_R:
///   rho_R(x)   = rho(Rx) - R_V rho(x)
///   theta_R(x,y) = theta(Rx,Ry) - R_V (theta(Rx,y) + theta(x,Ry)) + theta(x,y)
///   D_R(x,y)   = D(Rx,Ry) - R_V (D(Rx,y) + D(x,Ry)) + D(x,y)
/// Each term of the descendant bracket in which R would hit the V slot is
/// replaced by -R_V applied to the bracket without it. The variant
/// theta(Rx,Ry) + theta(Rx,y) + theta(x,Ry) - R_V theta(x,y) is not a
/// representation of L_R in general (it fails R3 already for R = id).
/// Throws CheckFailure when `rep` is not a valid representation of (A, R).
Representation induced_representation(const Representation &rep, const LinearOperator &r);

/// Replaces T_V by 2T_V - id (pairs with modified_from_rb on the algebra side).
Representation transport_rb_representation(const Representation &rep);

/// L + V with [x+u, y+v] = [x,y] + rho(x)v - rho(y)u,
/// {x+u, y+v, z+w} = {x,y,z} + D(x,y)w - theta(x,z)v + theta(y,z)u and
/// operator R + R_V. The L basis comes first, then the V basis.
MRBLYAlgebra semidirect_product(const LYAlgebra &a, const LinearOperator &r,
                                const Representation &rep);

} // namespace lyt
