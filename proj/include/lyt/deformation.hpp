#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "lyt/cohomology.hpp"

namespace lyt
{

/// Order-1 coefficients ((F1, G1), R1) of a formal deformation of (A, R).
/// F1 and G1 live in one Cochain2 with V = A (so F1(x,x) = 0 and
/// G1(x,x,z) = 0 hold by construction); R1 is n x n.
struct Infinitesimal
{
    Cochain2 fg;
    Matrix r1;

    static Infinitesimal zero(std::size_t n) { return {Cochain2(n, n), Matrix(n, n)}; }
    TotalCochain2 as_total() const { return {fg, {r1}}; }
    static Infinitesimal from_total(const TotalCochain2 &t) { return {t.ly, t.op.h}; }

    friend bool operator==(const Infinitesimal &, const Infinitesimal &) = default;
};

/// Context with the adjoint modified Rota-Baxter representation (R_V = R).
MrbContext adjoint_context(const LYAlgebra &a, const LinearOperator &r);

/// Verifies the order-1 deformation equations directly on basis tuples
/// (tags inf-LY3, inf-LY4, inf-LY5, inf-LY6, inf-MRB-binary,
/// inf-MRB-ternary) and independently evaluates d2 and aux2 on the total
/// cochain. Throws InternalError when the two verdicts disagree.
/// `ctx` must come from adjoint_context.
AxiomReport check_infinitesimal(const MrbContext &ctx, const Infinitesimal &inf,
                                std::size_t max_violations = kDefaultMaxViolations);
AxiomReport check_infinitesimal(const LYAlgebra &a, const LinearOperator &r, const Infinitesimal &inf,
                                std::size_t max_violations = kDefaultMaxViolations);

/// Some Psi with d1(Psi) = inf1 - inf2, or nullopt when none exists.
/// Throws CheckFailure when either argument fails check_infinitesimal.
std::optional<Cochain1> are_cohomologous(const MrbContext &ctx, const Infinitesimal &inf1,
                                         const Infinitesimal &inf2);

struct RigidityReport
{
    /// H^2 of the total complex with adjoint coefficients vanishes. This is
    /// sufficient for rigidity, not necessary.
    bool rigid = false;
    ComplexReport cohomology;
};

RigidityReport is_rigid(const LYAlgebra &a, const LinearOperator &r,
                        RankStrategy strategy = RankStrategy::FractionFree);

/// Entries drawn uniformly from {-2, -1, 0, 1, 2, 1/2}.
Scalar random_small_scalar(std::mt19937_64 &rng);
Infinitesimal random_infinitesimal(std::size_t n, std::mt19937_64 &rng);
Cochain1 random_cochain1(std::size_t n, std::size_t m, std::mt19937_64 &rng);

} // namespace lyt
