#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lyt/matrix.hpp"
#include "lyt/report.hpp"

namespace lyt
{

/// [e_i, e_j] = value, with i < j.
struct BinaryEntry
{
    std::size_t i, j;
    Vector value;
};

/// {e_i, e_j, e_k} = value, with i < j.
struct TernaryEntry
{
    std::size_t i, j, k;
    Vector value;
};

/// e_i * e_j = value for a (left) Leibniz product; any i, j.
struct ProductEntry
{
    std::size_t i, j;
    Vector value;
};

/// Finite-dimensional Lie-Yamaguti algebra given by structure constants.
///
/// Both tensors are stored densely: binary(i, j, k) is the coefficient of e_k
/// in [e_i, e_j], ternary(i, j, k, l) the coefficient of e_l in
/// {e_i, e_j, e_k}. Antisymmetry in the first two slots (LY1, LY2) is an
/// invariant of the type; LY3-LY6 are only known to hold once
/// check_ly_axioms has passed.
class LYAlgebra
{
public:
    LYAlgebra() = default;

    /// Takes full tensors of sizes dim^3 and dim^4. Throws InputError when
    /// either tensor is not antisymmetric in its first two slots.
    static LYAlgebra from_tensors(std::size_t dim, std::vector<Scalar> binary,
                                  std::vector<Scalar> ternary);

    std::size_t dim() const { return dim_; }

    const Scalar &binary(std::size_t i, std::size_t j, std::size_t k) const
    {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    const Scalar &ternary(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const
    {
        return t_[((i * dim_ + j) * dim_ + k) * dim_ + l];
    }
    const std::vector<Scalar> &binary_tensor() const { return c_; }
    const std::vector<Scalar> &ternary_tensor() const { return t_; }

    /// Multilinear extensions of the brackets; exact.
    Vector bracket2(std::span<const Scalar> x, std::span<const Scalar> y) const;
    Vector bracket3(std::span<const Scalar> x, std::span<const Scalar> y,
                    std::span<const Scalar> z) const;

    /// Nonzero canonical (i < j) entries, lexicographic.
    std::vector<BinaryEntry> binary_entries() const;
    std::vector<TernaryEntry> ternary_entries() const;

    bool is_abelian() const;

    friend bool operator==(const LYAlgebra &, const LYAlgebra &) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Scalar> c_;
    std::vector<Scalar> t_;
};

/// Builds an algebra from canonical entries; antisymmetric partners are
/// filled in by sign. Does not check LY3-LY6.
LYAlgebra make_algebra(std::size_t dim, const std::vector<BinaryEntry> &binary,
                       const std::vector<TernaryEntry> &ternary);

inline Vector bracket2(const LYAlgebra &a, std::span<const Scalar> x, std::span<const Scalar> y)
{
    return a.bracket2(x, y);
}
inline Vector bracket3(const LYAlgebra &a, std::span<const Scalar> x, std::span<const Scalar> y,
                       std::span<const Scalar> z)
{
    return a.bracket3(x, y, z);
}

/// Evaluates LY1-LY6 on every basis tuple. Multilinearity of every term makes
/// agreement on basis tuples equivalent to agreement everywhere.
AxiomReport check_ly_axioms(const LYAlgebra &a, std::size_t max_violations = kDefaultMaxViolations);

enum class OperatorKind
{
    ModifiedRotaBaxter,
    RotaBaxterWeightMinusOne,
    Nijenhuis,
};

AxiomReport check_modified_rb(const LYAlgebra &a, const LinearOperator &r,
                              std::size_t max_violations = kDefaultMaxViolations);
AxiomReport check_rb_weight_m1(const LYAlgebra &a, const LinearOperator &t,
                               std::size_t max_violations = kDefaultMaxViolations);
AxiomReport check_nijenhuis(const LYAlgebra &a, const LinearOperator &n,
                            std::size_t max_violations = kDefaultMaxViolations);
AxiomReport check_operator(const LYAlgebra &a, const LinearOperator &op, OperatorKind kind,
                           std::size_t max_violations = kDefaultMaxViolations);

/// 2T - id.
LinearOperator modified_from_rb(const LinearOperator &t);

/// The descendant algebra L_R: [x,y]_R = [Rx,y] + [x,Ry] and
/// {x,y,z}_R = {x,Ry,Rz} + {Rx,y,Rz} + {Rx,Ry,z} + {x,y,z}.
/// Throws CheckFailure when R is not a modified Rota-Baxter operator.
LYAlgebra descendant(const LYAlgebra &a, const LinearOperator &r);

/// Lie algebra viewed as a Lie-Yamaguti algebra with {x,y,z} = [[x,y],z].
/// Throws CheckFailure with a witness triple when Jacobi fails.
LYAlgebra from_lie(std::size_t dim, const std::vector<BinaryEntry> &lie_bracket);

/// Left Leibniz algebra (x*(y*z) = (x*y)*z + y*(x*z)) viewed as a
/// Lie-Yamaguti algebra with [x,y] = x*y - y*x and {x,y,z} = -(x*y)*z.
LYAlgebra from_leibniz(std::size_t dim, const std::vector<ProductEntry> &star);

struct SearchOptions
{
    /// Maximum number of matrices to enumerate.
    std::uint64_t budget = 1u << 20;
    unsigned threads = 1;
};

class BudgetExceeded : public InputError
{
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget);
    /// Saturates at UINT64_MAX.
    std::uint64_t required() const { return required_; }

private:
    std::uint64_t required_;
};

/// All dim x dim matrices with entries drawn from `candidates` that pass the
/// requested check. Enumeration is row-major with the first entry most
/// significant, each entry running through `candidates` in the given order;
/// the output preserves that order regardless of `threads`.
std::vector<LinearOperator> search_operators(const LYAlgebra &a, const std::vector<Scalar> &candidates,
                                             OperatorKind kind, const SearchOptions &options = {});

} // namespace lyt
