#include "lyt/deformation.hpp"

#include <array>

namespace lyt
{

MrbContext adjoint_context(const LYAlgebra &a, const LinearOperator &r)
{
    return MrbContext(adjoint_mrb_representation(a, r), r);
}

AxiomReport check_infinitesimal(const MrbContext &ctx, const Infinitesimal &inf,
                                std::size_t max_violations)
{
    const LYAlgebra &A = ctx.algebra();
    const LinearOperator &R = ctx.r();
    const std::size_t n = A.dim();
    if (inf.fg.dim() != n || inf.fg.dim_v() != n || inf.r1.rows() != n || inf.r1.cols() != n)
        throw InputError("infinitesimal: shape does not match the algebra");

    auto br = [&](const Vector &x, const Vector &y) { return A.bracket2(x, y); };
    auto tr = [&](const Vector &x, const Vector &y, const Vector &z) { return A.bracket3(x, y, z); };
    auto F = [&](const Vector &x, const Vector &y) { return inf.fg.eval_f(x, y); };
    auto G = [&](const Vector &x, const Vector &y, const Vector &z) { return inf.fg.eval_g(x, y, z); };
    auto Rm = [&](const Vector &x) { return R.apply(x); };
    auto S = [&](const Vector &x) { return inf.r1.apply(x); };

    std::vector<Vector> e, re, se;
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back(unit_vector(n, i));
        re.push_back(R.column(i));
        se.push_back(inf.r1.column(i));
    }
    const Vector zero = zero_vector(n);

    ReportBuilder rb(max_violations);
    auto run = [&]() {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    const std::array<std::array<std::size_t, 3>, 3> cyc{
                        {{x, y, z}, {z, x, y}, {y, z, x}}};
                    Vector ly3 = zero_vector(n);
                    for (auto [p, q, s] : cyc)
                        ly3 = ly3 + br(F(e[p], e[q]), e[s]) + F(br(e[p], e[q]), e[s]) + G(e[p], e[q], e[s]);
                    if (!rb.expect_equal("inf-LY3", {x, y, z}, ly3, zero))
                        return;
                    for (std::size_t a = 0; a < n; ++a) {
                        Vector ly4 = zero_vector(n);
                        for (auto [p, q, s] : cyc)
                            ly4 = ly4 + G(br(e[p], e[q]), e[s], e[a]) + tr(F(e[p], e[q]), e[s], e[a]);
                        if (!rb.expect_equal("inf-LY4", {x, y, z, a}, ly4, zero))
                            return;
                    }
                }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y) {
                        const Vector abx = tr(e[a], e[b], e[x]), aby = tr(e[a], e[b], e[y]);
                        Vector lhs = G(e[a], e[b], br(e[x], e[y])) + tr(e[a], e[b], F(e[x], e[y]));
                        Vector rhs = F(abx, e[y]) + br(G(e[a], e[b], e[x]), e[y]) + F(e[x], aby) +
                                     br(e[x], G(e[a], e[b], e[y]));
                        if (!rb.expect_equal("inf-LY5", {a, b, x, y}, lhs, rhs))
                            return;
                        for (std::size_t z = 0; z < n; ++z) {
                            const Vector xyz = tr(e[x], e[y], e[z]), abz = tr(e[a], e[b], e[z]);
                            const Vector gabx = G(e[a], e[b], e[x]), gaby = G(e[a], e[b], e[y]),
                                         gabz = G(e[a], e[b], e[z]);
                            Vector l6 = G(e[a], e[b], xyz) + tr(e[a], e[b], G(e[x], e[y], e[z]));
                            Vector r6 = G(abx, e[y], e[z]) + tr(gabx, e[y], e[z]) + G(e[x], aby, e[z]) +
                                        tr(e[x], gaby, e[z]) + G(e[x], e[y], abz) + tr(e[x], e[y], gabz);
                            if (!rb.expect_equal("inf-LY6", {a, b, x, y, z}, l6, r6))
                                return;
                        }
                    }
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const Vector &Rx = re[x], &Ry = re[y], &Sx = se[x], &Sy = se[y];
                Vector lhs = F(Rx, Ry) + br(Sx, Ry) + br(Rx, Sy);
                Vector rhs = S(br(Rx, e[y]) + br(e[x], Ry)) + Rm(F(Rx, e[y]) + F(e[x], Ry)) +
                             Rm(br(Sx, e[y]) + br(e[x], Sy)) - F(e[x], e[y]);
                if (!rb.expect_equal("inf-MRB-binary", {x, y}, lhs, rhs))
                    return;
            }
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    const Vector &X = e[x], &Y = e[y], &Z = e[z];
                    const Vector &Rx = re[x], &Ry = re[y], &Rz = re[z];
                    const Vector &Sx = se[x], &Sy = se[y], &Sz = se[z];
                    Vector lhs = G(Rx, Ry, Rz) + tr(Sx, Ry, Rz) + tr(Rx, Sy, Rz) + tr(Rx, Ry, Sz);
                    Vector rhs = S(tr(X, Ry, Rz) + tr(Rx, Y, Rz) + tr(Rx, Ry, Z)) +
                                 Rm(G(X, Ry, Rz) + G(Rx, Y, Rz) + G(Rx, Ry, Z)) +
                                 Rm(tr(X, Sy, Rz) + tr(Sx, Y, Rz) + tr(Sx, Ry, Z) + tr(X, Ry, Sz) +
                                    tr(Rx, Y, Sz) + tr(Rx, Sy, Z)) +
                                 S(tr(X, Y, Z)) + Rm(G(X, Y, Z)) - G(Rx, Y, Z) - G(X, Ry, Z) -
                                 G(X, Y, Rz) - tr(Sx, Y, Z) - tr(X, Sy, Z) - tr(X, Y, Sz);
                    if (!rb.expect_equal("inf-MRB-ternary", {x, y, z}, lhs, rhs))
                        return;
                }
    };
    run();
    AxiomReport direct = std::move(rb).finish();

    const TotalCochain2 total = inf.as_total();
    const bool cocycle = d2(ctx, total).is_zero() && is_zero(total_aux2(ctx, total));
    if (cocycle != direct.passed)
        throw InternalError(std::string("check_infinitesimal: direct equations say ") +
                            (direct.passed ? "pass" : "fail") + " but d2/aux2 say " +
                            (cocycle ? "cocycle" : "not a cocycle"));
    return direct;
}

AxiomReport check_infinitesimal(const LYAlgebra &a, const LinearOperator &r, const Infinitesimal &inf,
                                std::size_t max_violations)
{
    return check_infinitesimal(adjoint_context(a, r), inf, max_violations);
}

std::optional<Cochain1> are_cohomologous(const MrbContext &ctx, const Infinitesimal &inf1,
                                         const Infinitesimal &inf2)
{
    for (const Infinitesimal *inf : {&inf1, &inf2}) {
        AxiomReport rep = check_infinitesimal(ctx, *inf);
        if (!rep.passed)
            throw CheckFailure("are_cohomologous: argument is not a 2-cocycle", rep);
    }
    const std::size_t n = ctx.dim();
    const Vector diff = (inf1.as_total() - inf2.as_total()).flatten();
    auto x = solve(matrix_of(Differential::D1, ctx), diff);
    if (!x)
        return std::nullopt;
    Cochain1 psi = Cochain1::unflatten(n, n, *x);
    if (!(d1(ctx, psi) == inf1.as_total() - inf2.as_total()))
        throw InternalError("are_cohomologous: solver returned a wrong witness");
    return psi;
}

RigidityReport is_rigid(const LYAlgebra &a, const LinearOperator &r, RankStrategy strategy)
{
    RigidityReport out;
    out.cohomology =
        cohomology_dims(ComplexKind::MRBLY, 2, adjoint_mrb_representation(a, r), r, strategy);
    out.rigid = out.cohomology.dim_cohomology == 0;
    return out;
}

Scalar random_small_scalar(std::mt19937_64 &rng)
{
    static const std::array<Scalar, 6> pool{Scalar(-2), Scalar(-1), Scalar(0),
                                            Scalar(1),  Scalar(2),  Scalar(1, 2)};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return pool[pick(rng)];
}

Cochain1 random_cochain1(std::size_t n, std::size_t m, std::mt19937_64 &rng)
{
    Matrix h(m, n);
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t s = 0; s < n; ++s)
            h(t, s) = random_small_scalar(rng);
    return {std::move(h)};
}

Infinitesimal random_infinitesimal(std::size_t n, std::mt19937_64 &rng)
{
    Vector flat(Cochain2::size(n, n));
    for (auto &s : flat)
        s = random_small_scalar(rng);
    return {Cochain2::unflatten(n, n, flat), random_cochain1(n, n, rng).h};
}

} // namespace lyt
