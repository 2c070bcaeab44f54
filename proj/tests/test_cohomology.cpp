#include "doctest.h"
#include "lyt/corpus.hpp"
#include "support.hpp"

using namespace lyt;
using test::vec;

namespace
{

Cochain1 identity_cochain(std::size_t n) { return {Matrix::identity(n)}; }

} // namespace

TEST_CASE("wedge indexing")
{
    CHECK(wedge_count(0) == 0);
    CHECK(wedge_count(1) == 0);
    CHECK(wedge_count(4) == 6);
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t w = 0; w < wedge_count(n); ++w) {
            auto [i, j] = wedge_pair(w, n);
            CHECK(i < j);
            CHECK(wedge_index(i, j, n) == w);
        }
    CHECK(wedge_pair(0, 3) == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(wedge_pair(2, 3) == std::pair<std::size_t, std::size_t>{1, 2});
}

TEST_CASE("cochain evaluation is antisymmetric in wedge slots")
{
    std::mt19937_64 rng(test::seed());
    const std::size_t n = 3, m = 2;
    Vector flat2 = test::random_vector(Cochain2::size(n, m), rng);
    const Cochain2 c = Cochain2::unflatten(n, m, flat2);
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(is_zero(c.f(i, i)));
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(c.f(i, j) == -c.f(j, i));
            for (std::size_t k = 0; k < n; ++k) {
                CHECK(c.g(i, j, k) == -c.g(j, i, k));
                CHECK(is_zero(c.g(i, i, k)));
            }
        }
    }
    Cochain2 d(n, m);
    CHECK_THROWS_AS(d.set_f(1, 1, vec({1, 0})), InputError);
    d.set_f(1, 1, vec({0, 0}));
    d.set_f(2, 0, vec({1, 2}));
    CHECK(d.f(0, 2) == vec({-1, -2}));

    Vector flat3 = test::random_vector(Cochain3::size(n, m), rng);
    const Cochain3 t = Cochain3::unflatten(n, m, flat3);
    CHECK(t.f(1, 0, 0, 2) == -t.f(0, 1, 0, 2));
    CHECK(t.f(0, 1, 2, 0) == -t.f(0, 1, 0, 2));
    CHECK(is_zero(t.g(0, 1, 2, 2, 1)));
    CHECK(t.flatten() == flat3);
    CHECK(Cochain2::unflatten(n, m, c.flatten()) == c);
}

TEST_CASE("delta1 oracle: 2-dim example, adjoint, h = id")
{
    // f(e0,e1) = [e0,e1] - [e1,e0] - [e0,e1] = e0;
    // g(x,y,z) = {x,y,z} + {x,y,z} + {x,y,z} - {x,y,z} = 2{x,y,z}.
    const Representation ad = adjoint_representation(corpus::ly2());
    const Cochain2 c = delta1(ad, identity_cochain(2));
    CHECK(c.f(0, 1) == vec({1, 0}));
    CHECK(c.g(0, 1, 0) == vec({0, 0}));
    CHECK(c.g(0, 1, 1) == vec({2, 0}));
    CHECK(delta1(ad, Cochain1::zero(2, 2)).is_zero());
    const Representation z = zero_representation(corpus::abelian(2), 3);
    std::mt19937_64 rng(test::seed());
    CHECK(delta1(z, random_cochain1(2, 3, rng)).is_zero());
    CHECK(delta2(z, Cochain2::unflatten(2, 3, test::random_vector(Cochain2::size(2, 3), rng))).is_zero());
}

TEST_CASE("partial1 with R = R_V = id")
{
    // rho_R = 0 and theta_R = D_R = 0, so partial1(h) = (-h([x,y]_R), -h({x,y,z}_R)).
    const LYAlgebra a = corpus::ly2();
    const MrbContext ctx(adjoint_mrb_representation(a, Matrix::identity(2)), Matrix::identity(2));
    const Cochain2 c = partial1(ctx, identity_cochain(2));
    CHECK(c.f(0, 1) == vec({-2, 0}));
    CHECK(c.g(0, 1, 1) == vec({-4, 0}));
    CHECK(c.g(0, 1, 0) == vec({0, 0}));
    CHECK(partial1(ctx, Cochain1::zero(2, 2)).is_zero());
}

TEST_CASE("partial1 oracle against direct evaluation")
{
    const LYAlgebra a = corpus::ly2();
    const Matrix r{{1, 3}, {0, 2}};
    const MrbContext ctx(adjoint_mrb_representation(a, r), r);
    std::mt19937_64 rng(test::seed() + 7);
    for (int t = 0; t < 5; ++t) {
        const Cochain1 h = t == 0 ? identity_cochain(2) : random_cochain1(2, 2, rng);
        const Cochain2 got = partial1(ctx, h);
        auto H = [&](const Vector &v) { return h.h.apply(v); };
        auto rhoR = [&](const Vector &x, const Vector &u) { return a.bracket2(r.apply(x), u) - r.apply(a.bracket2(x, u)); };
        auto tri = [&](const Vector &x, const Vector &y, const Vector &z) {
            return a.bracket3(x, y, z);
        };
        // {x,y,z}_R and the induced theta / D written out from the adjoint data.
        auto triR = [&](const Vector &x, const Vector &y, const Vector &z) {
            const Vector rx = r.apply(x), ry = r.apply(y), rz = r.apply(z);
            return tri(x, ry, rz) + tri(rx, y, rz) + tri(rx, ry, z) + tri(x, y, z);
        };
        auto dR = [&](const Vector &x, const Vector &y, const Vector &u) {
            const Vector rx = r.apply(x), ry = r.apply(y);
            return tri(rx, ry, u) - r.apply(tri(rx, y, u) + tri(x, ry, u)) + tri(x, y, u);
        };
        auto thetaR = [&](const Vector &x, const Vector &y, const Vector &u) {
            const Vector rx = r.apply(x), ry = r.apply(y);
            return tri(u, rx, ry) - r.apply(tri(u, rx, y) + tri(u, x, ry)) + tri(u, x, y);
        };
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = i + 1; j < 2; ++j) {
                const Vector x = unit_vector(2, i), y = unit_vector(2, j);
                const Vector bracketR = a.bracket2(r.apply(x), y) + a.bracket2(x, r.apply(y));
                CHECK(got.f(i, j) == rhoR(x, H(y)) - rhoR(y, H(x)) - H(bracketR));
                for (std::size_t k = 0; k < 2; ++k) {
                    const Vector z = unit_vector(2, k);
                    CHECK(got.g(i, j, k) == dR(x, y, H(z)) + thetaR(y, z, H(x)) - thetaR(x, z, H(y)) - H(triR(x, y, z)));
                }
            }
    }
}

TEST_CASE("phi1 and phi2")
{
    const LYAlgebra a = corpus::ly2();
    const Matrix r{{1, 3}, {0, 2}};
    const MrbContext ctx(adjoint_mrb_representation(a, r), r);
    CHECK(phi1(ctx, identity_cochain(2)).h.is_zero());
    CHECK(phi1(ctx, Cochain1::zero(2, 2)).h.is_zero());
    // hR - Rh with h = [[0,1],[0,0]]: [[0,2],[0,0]] - [[0,1],[0,0]].
    CHECK(phi1(ctx, {Matrix{{0, 1}, {0, 0}}}).h == Matrix{{0, 1}, {0, 0}});
    CHECK(phi2(ctx, Cochain2(2, 2)).is_zero());

    const MrbContext id(adjoint_mrb_representation(a, Matrix::identity(2)), Matrix::identity(2));
    std::mt19937_64 rng(test::seed());
    const Cochain2 c = Cochain2::unflatten(2, 2, test::random_vector(Cochain2::size(2, 2), rng));
    CHECK(phi2(id, c).is_zero());
    CHECK(matrix_of(Differential::Phi1, id).is_zero());
}

TEST_CASE("matrix shapes")
{
    const Representation z1 = zero_representation(corpus::abelian(1), 1);
    const Matrix m = matrix_of(Differential::Delta1, z1);
    CHECK(m.rows() == 0);
    CHECK(m.cols() == 1);

    const Representation ad = adjoint_representation(corpus::ly2());
    const Matrix d1m = matrix_of(Differential::Delta1, ad);
    CHECK(d1m.cols() == 4);
    CHECK(d1m.rows() == Cochain2::size(2, 2));
    CHECK(d1m.rows() == 1 * 2 + 1 * 2 * 2);
    CHECK(rank(d1m, RankStrategy::FractionFree) == rank(d1m, RankStrategy::RationalEchelon));
    // Column t*n + s is the unit cochain with h(t, s) = 1.
    Cochain1 unit = Cochain1::zero(2, 2);
    unit.h(1, 0) = 1;
    CHECK(d1m.column(1 * 2 + 0) == delta1(ad, unit).flatten());
}

TEST_CASE("differentials compose to zero on the corpus")
{
    for (const auto &p : corpus::pairs()) {
        const MrbContext ctx(adjoint_mrb_representation(p.algebra, p.op), p.op);
        const Representation &rep = ctx.rep();
        CHECK_MESSAGE((matrix_of(Differential::Delta2, rep) * matrix_of(Differential::Delta1, rep)).is_zero(), p.name);
        CHECK_MESSAGE((matrix_of(Differential::Aux2, rep) * matrix_of(Differential::Delta1, rep)).is_zero(), p.name);
        CHECK_MESSAGE((matrix_of(Differential::Partial2, ctx) * matrix_of(Differential::Partial1, ctx)).is_zero(), p.name);
        CHECK_MESSAGE((matrix_of(Differential::D2, ctx) * matrix_of(Differential::D1, ctx)).is_zero(), p.name);
        CHECK_MESSAGE((matrix_of(Differential::TotalAux2, ctx) * matrix_of(Differential::D1, ctx)).is_zero(), p.name);
        CHECK_MESSAGE(matrix_of(Differential::Phi2, ctx) * matrix_of(Differential::Delta1, ctx) ==
                          matrix_of(Differential::Partial1, ctx) * matrix_of(Differential::Phi1, ctx),
                      p.name);
    }
}

TEST_CASE("partial1 equals delta1 over the descendant and induced representation")
{
    for (const auto &p : corpus::pairs()) {
        const MrbContext ctx(adjoint_mrb_representation(p.algebra, p.op), p.op);
        CHECK_MESSAGE(matrix_of(Differential::Partial1, ctx) == matrix_of(Differential::Delta1, ctx.induced()), p.name);
    }
}

TEST_CASE("threaded assembly is identical")
{
    const auto p = corpus::pairs()[3];
    const MrbContext ctx(adjoint_mrb_representation(p.algebra, p.op), p.op);
    for (auto d : {Differential::Delta2, Differential::D1, Differential::D2, Differential::TotalAux2})
        CHECK(matrix_of(d, ctx, 1) == matrix_of(d, ctx, 4));
}

TEST_CASE("differential tags")
{
    for (auto d : {Differential::Delta1, Differential::Delta2, Differential::Aux2, Differential::Partial1,
                   Differential::Partial2, Differential::PartialAux2, Differential::Phi1, Differential::Phi2,
                   Differential::D1, Differential::D2, Differential::TotalAux2})
        CHECK(parse_differential(to_string(d)) == d);
    CHECK_THROWS_AS(parse_differential("delta9"), InputError);
    CHECK_THROWS_AS(matrix_of(Differential::Partial1, adjoint_representation(corpus::ly2())), InputError);
    for (auto k : {ComplexKind::LY, ComplexKind::MRBO, ComplexKind::MRBLY})
        CHECK(parse_complex(to_string(k)) == k);
}

TEST_CASE("cohomology dimensions")
{
    const Representation z = adjoint_representation(corpus::abelian(1));
    const ComplexReport h1 = cohomology_dims(ComplexKind::LY, 1, z, std::nullopt);
    CHECK(h1.dim_cochain == 1);
    CHECK(h1.dim_cohomology == 1);

    const LYAlgebra ab = corpus::abelian(2);
    const ComplexReport t1 = cohomology_dims(ComplexKind::MRBLY, 1, zero_representation(ab, 2, Matrix(2, 2)), Matrix(2, 2));
    CHECK(t1.dim_cohomology == t1.dim_cochain);

    for (const auto &p : corpus::pairs()) {
        const Representation rep = adjoint_mrb_representation(p.algebra, p.op);
        for (auto kind : {ComplexKind::LY, ComplexKind::MRBO, ComplexKind::MRBLY})
            for (int degree : {1, 2}) {
                const ComplexReport a = cohomology_dims(kind, degree, rep, p.op, RankStrategy::FractionFree);
                const ComplexReport b = cohomology_dims(kind, degree, rep, p.op, RankStrategy::RationalEchelon);
                CHECK(a.dim_cohomology == b.dim_cohomology);
                CHECK(a.dim_cocycles == b.dim_cocycles);
                CHECK(a.dim_coboundaries == b.dim_coboundaries);
                CHECK(a.dim_cochain == a.dim_cocycles + a.rank_outgoing);
                CHECK(a.dim_cohomology == a.dim_cocycles - a.dim_coboundaries);
                CHECK(a.dim_cocycles <= a.dim_differential_kernel);
                CHECK(a.basis_order == kBasisOrderTag);
            }
    }
}

TEST_CASE("cohomology oracle values")
{
    // 2-dim example, R = [[1,3],[0,2]]: Z^2 = 5, H^2 = 2 in the total complex.
    const Matrix r{{1, 3}, {0, 2}};
    const ComplexReport a = cohomology_dims(ComplexKind::MRBLY, 2, adjoint_mrb_representation(corpus::ly2(), r), r);
    CHECK(a.dim_cochain == 10);
    CHECK(a.dim_cocycles == 5);
    CHECK(a.dim_cohomology == 2);
    // The extra LY3/LY4 rows matter on the 3-dim example with R = id.
    const ComplexReport b = cohomology_dims(ComplexKind::LY, 2, adjoint_representation(corpus::ly3()), std::nullopt);
    CHECK(b.dim_cocycles < b.dim_differential_kernel);
}
