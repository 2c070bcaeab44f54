#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lyt/cochain.hpp"
#include "lyt/linalg.hpp"
#include "lyt/representation.hpp"

namespace lyt
{

/// A validated modified Rota-Baxter representation (rep, R) together with
/// the descendant algebra and the induced representation on it.
class MrbContext
{
public:
    /// Throws CheckFailure when R or (rep, R_V) fail validation and
    /// InputError when R_V is missing.
    MrbContext(Representation rep, LinearOperator r);

    const Representation &rep() const { return rep_; }
    const LYAlgebra &algebra() const { return rep_.algebra(); }
    const LinearOperator &r() const { return r_; }
    const Matrix &rv() const { return *rep_.rv(); }
    const LYAlgebra &descendant() const { return induced_.algebra(); }
    const Representation &induced() const { return induced_; }
    std::size_t dim() const { return rep_.dim(); }
    std::size_t dim_v() const { return rep_.dim_v(); }

private:
    Representation rep_;
    LinearOperator r_;
    Representation induced_;
};

// Yamaguti complex of (A, rep); A is rep.algebra().
Cochain2 delta1(const Representation &rep, const Cochain1 &h);
Cochain3 delta2(const Representation &rep, const Cochain2 &c);

/// The conditions a degree-2 cochain (nu, psi) must meet for the twisted
/// brackets on L + V to satisfy LY3 and LY4:
///   I(x,y,z)    = cyc_{x,y,z} [ nu([x,y],z) - rho(z) nu(x,y) + psi(x,y,z) ]
///   II(x,y,z,a) = cyc_{x,y,z} [ psi([x,y],z,a) + theta(z,a) nu(x,y) ]
/// Both are alternating in x, y, z, so they are stored on triples i<j<k
/// (lexicographic): I at t*m + a, then II at T*m + (t*n + l)*m + a.
/// delta2 does not see these conditions; cocycles must satisfy both.
Vector aux2(const Representation &rep, const Cochain2 &c);
std::size_t aux2_size(std::size_t n, std::size_t m);

// MRBO complex. partial1 is evaluated from (rho, theta, D, R, R_V) directly;
// partial2 delegates to delta2 over (descendant, induced).
Cochain2 partial1(const MrbContext &ctx, const Cochain1 &h);
Cochain3 partial2(const MrbContext &ctx, const Cochain2 &c);

/// h R - R_V h.
Cochain1 phi1(const MrbContext &ctx, const Cochain1 &h);
Cochain2 phi2(const MrbContext &ctx, const Cochain2 &c);

/// (delta1 h, -phi1 h).
TotalCochain2 d1(const MrbContext &ctx, const Cochain1 &h);
/// (delta2 (f,g), -partial1 h - phi2 (f,g)).
TotalCochain3 d2(const MrbContext &ctx, const TotalCochain2 &c);
/// aux2 applied to the ly part.
Vector total_aux2(const MrbContext &ctx, const TotalCochain2 &c);

enum class Differential
{
    Delta1,
    Delta2,
    Aux2,
    Partial1,
    Partial2,
    PartialAux2,
    Phi1,
    Phi2,
    D1,
    D2,
    TotalAux2,
};

std::string to_string(Differential d);
/// Throws InputError on an unknown tag.
Differential parse_differential(std::string_view tag);
bool needs_operator(Differential d);

/// Matrix in the flat cochain bases (columns = domain, rows = codomain).
/// Columns are assembled independently, split over `threads` workers.
Matrix matrix_of(Differential d, const Representation &rep, unsigned threads = 1);
Matrix matrix_of(Differential d, const MrbContext &ctx, unsigned threads = 1);

enum class ComplexKind
{
    LY,
    MRBO,
    MRBLY,
};

std::string to_string(ComplexKind k);
ComplexKind parse_complex(std::string_view tag);

struct ComplexReport
{
    ComplexKind complex = ComplexKind::LY;
    int degree = 1;
    std::size_t dim_cochain = 0;
    std::size_t dim_cocycles = 0;
    std::size_t dim_coboundaries = 0;
    std::size_t dim_cohomology = 0;
    /// Rank of everything a cocycle must vanish under (differential plus
    /// aux2 in degree 2).
    std::size_t rank_outgoing = 0;
    /// Kernel dimension of the bare outgoing differential.
    std::size_t dim_differential_kernel = 0;
    RankStrategy strategy = RankStrategy::FractionFree;
    std::string basis_order = kBasisOrderTag;

    friend bool operator==(const ComplexReport &, const ComplexReport &) = default;
};

/// The two matrices that define one cohomology group: cocycles are the
/// kernel of `outgoing`, coboundaries the image of `incoming`.
struct ComplexMatrices
{
    Matrix outgoing;
    Matrix incoming;
    /// Rows of `outgoing` that belong to the bare differential (the rest
    /// are aux2 rows).
    std::size_t differential_rows = 0;
};

/// Degree 1 or 2. The complex starts in degree 1, so H^1 is a kernel with
/// nothing to quotient by. For ComplexKind::LY the operator is ignored.
ComplexMatrices complex_matrices(ComplexKind kind, int degree, const Representation &rep,
                                 const std::optional<LinearOperator> &r, unsigned threads = 1);

/// Throws InternalError when the image of `incoming` is not inside the
/// kernel of `outgoing`.
ComplexReport cohomology_dims(ComplexKind kind, int degree, const Representation &rep,
                              const std::optional<LinearOperator> &r,
                              RankStrategy strategy = RankStrategy::FractionFree,
                              unsigned threads = 1);

} // namespace lyt
