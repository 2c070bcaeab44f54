// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "first_order.hpp"
#include "lyt/corpus.hpp"
#include "lyt/extension.hpp"

using namespace lyt;

namespace
{

struct Outcome
{
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string &what)
    {
        if (ok)
            detail << what;
        ok = false;
    }
};

std::vector<LYAlgebra> corpus_algebras()
{
    std::vector<LYAlgebra> out;
    for (const auto &name : corpus::algebra_names())
        out.push_back(corpus::algebra_by_name(name));
    out.push_back(corpus::abelian(2));
    return out;
}

MrbContext adjoint_ctx(const corpus::Pair &p) { return MrbContext(adjoint_mrb_representation(p.algebra, p.op), p.op); }

void examples_pass(Outcome &o)
{
    for (const auto &a : {corpus::ly2(), corpus::ly3()}) {
        const AxiomReport r = check_ly_axioms(a);
        if (!r.passed || !r.violations.empty())
            o.fail("example algebra has violations");
    }
    o.detail << "2 algebras, 0 violations";
}

void operator_families(Outcome &o)
{
    const std::vector<Scalar> values{0, 1, -1, 2, -2, Scalar(1, 2)};
    std::size_t n2 = 0, n3 = 0;
    for (const auto &k : values)
        for (const auto &k1 : values) {
            ++n2;
            if (!check_modified_rb(corpus::ly2(), corpus::ly2_operator(k, k1)).passed)
                o.fail("ly2 family fails");
        }
    const std::vector<Scalar> ks{-1, 0, 1};
    const std::vector<Scalar> others{1, -1, 2, Scalar(1, 2)};
    for (const auto &k : ks)
        for (const auto &k1 : others)
            for (const auto &k2 : {Scalar(0), Scalar(3)})
                for (const auto &k3 : {Scalar(0), Scalar(-2, 3)}) {
                    ++n3;
                    if (!check_modified_rb(corpus::ly3(), corpus::ly3_operator(k, k1, k2, k3)).passed)
                        o.fail("ly3 family fails");
                }
    std::size_t nid = 0;
    for (const auto &a : corpus_algebras()) {
        ++nid;
        if (!check_modified_rb(a, Matrix::identity(a.dim())).passed)
            o.fail("identity fails");
    }
    o.detail << "ly2 " << n2 << ", ly3 " << n3 << ", identity on " << nid << " algebras";
}

void transport(Outcome &o)
{
    std::size_t found = 0;
    for (const auto &a : {corpus::ly2(), corpus::ly3()})
        for (const auto &t : search_operators(a, {-1, 0, 1}, OperatorKind::RotaBaxterWeightMinusOne)) {
            ++found;
            if (!check_modified_rb(a, modified_from_rb(t)).passed)
                o.fail("2T - id fails");
        }
    if (found == 0)
        o.fail("no weight -1 operators found");
    o.detail << found << " weight -1 operators";
}

void nijenhuis(Outcome &o)
{
    const LYAlgebra a = corpus::ly2();
    const Matrix id = Matrix::identity(2);
    std::size_t involutive = 0, agree = 0;
    const Scalar vals[] = {-1, 0, 1};
    for (int code = 0; code < 81; ++code) {
        Matrix n(2, 2);
        int c = code;
        for (std::size_t e = 0; e < 4; ++e, c /= 3)
            n(e / 2, e % 2) = vals[c % 3];
        if (n * n != id)
            continue;
        ++involutive;
        const bool nij = check_nijenhuis(a, n).passed;
        const bool mrb = check_modified_rb(a, n).passed;
        if (nij == mrb)
            ++agree;
        else
            o.fail("verdicts differ");
    }
    o.detail << agree << "/" << involutive << " involutions agree";
}

void matrix_identities(Outcome &o)
{
    for (const auto &p : corpus::pairs()) {
        const MrbContext ctx = adjoint_ctx(p);
        const Representation &rep = ctx.rep();
        if (!(matrix_of(Differential::Delta2, rep) * matrix_of(Differential::Delta1, rep)).is_zero())
            o.fail(p.name + ": delta delta");
        if (!(matrix_of(Differential::Partial2, ctx) * matrix_of(Differential::Partial1, ctx)).is_zero())
            o.fail(p.name + ": partial partial");
        if (!(matrix_of(Differential::D2, ctx) * matrix_of(Differential::D1, ctx)).is_zero())
            o.fail(p.name + ": d d");
        if (matrix_of(Differential::Phi2, ctx) * matrix_of(Differential::Delta1, ctx) !=
            matrix_of(Differential::Partial1, ctx) * matrix_of(Differential::Phi1, ctx))
            o.fail(p.name + ": chain map");
    }
    o.detail << corpus::pairs().size() << " pairs";
}

void delegation(Outcome &o)
{
    for (const auto &p : corpus::pairs()) {
        const MrbContext ctx = adjoint_ctx(p);
        const Representation induced = induced_representation(ctx.rep(), p.op);
        if (!(induced.algebra() == descendant(p.algebra, p.op)))
            o.fail(p.name + ": induced lives on another algebra");
        if (matrix_of(Differential::Partial1, ctx) != matrix_of(Differential::Delta1, induced))
            o.fail(p.name + ": matrices differ");
    }
    o.detail << corpus::pairs().size() << " pairs, entry-for-entry";
}

void strategies(Outcome &o)
{
    std::size_t complexes = 0;
    for (const auto &p : corpus::pairs()) {
        const Representation rep = adjoint_mrb_representation(p.algebra, p.op);
        for (auto kind : {ComplexKind::LY, ComplexKind::MRBO, ComplexKind::MRBLY})
            for (int degree : {1, 2}) {
                ++complexes;
                const auto a = cohomology_dims(kind, degree, rep, p.op, RankStrategy::FractionFree);
                const auto b = cohomology_dims(kind, degree, rep, p.op, RankStrategy::RationalEchelon);
                const std::string where = p.name + " " + to_string(kind) + " " + std::to_string(degree);
                if (a.dim_cochain != b.dim_cochain || a.dim_cocycles != b.dim_cocycles ||
                    a.dim_coboundaries != b.dim_coboundaries || a.dim_cohomology != b.dim_cohomology)
                    o.fail(where + ": strategies disagree");
                if (a.dim_cocycles + a.rank_outgoing != a.dim_cochain)
                    o.fail(where + ": rank-nullity");
                if (a.dim_coboundaries > a.dim_cocycles || a.dim_cohomology != a.dim_cocycles - a.dim_coboundaries)
                    o.fail(where + ": negative cohomology");
            }
    }
    o.detail << complexes << " complexes";
}

void deformations(Outcome &o, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::size_t total = 0, passing = 0, images = 0;
    for (const auto &p : corpus::pairs()) {
        const MrbContext ctx = adjoint_context(p.algebra, p.op);
        const std::size_t n = p.algebra.dim();
        const ComplexMatrices mats = complex_matrices(ComplexKind::MRBLY, 2, ctx.rep(), p.op);
        const auto kernel = kernel_basis(mats.outgoing);
        for (int t = 0; t < 200; ++t) {
            Infinitesimal inf;
            const int mode = t % 4;
            if (mode == 0) {
                inf = random_infinitesimal(n, rng);
            } else if (mode == 1) {
                inf = Infinitesimal::from_total(d1(ctx, random_cochain1(n, n, rng)));
            } else {
                Vector v = zero_vector(TotalCochain2::size(n, n));
                for (const auto &k : kernel)
                    axpy(v, random_small_scalar(rng), k);
                if (mode == 3)
                    v[rng() % v.size()] += random_small_scalar(rng);
                inf = Infinitesimal::from_total(TotalCochain2::unflatten(n, n, v));
            }
            ++total;
            const bool direct = check_infinitesimal(ctx, inf).passed;
            const bool in_kernel = mats.outgoing.apply(inf.as_total().flatten()) == zero_vector(mats.outgoing.rows());
            passing += direct;
            if (direct != in_kernel)
                o.fail(p.name + ": direct verdict differs from the kernel verdict");
            if (direct != test::first_order_passes(p.algebra, p.op, inf))
                o.fail(p.name + ": direct verdict differs from the first-order oracle");
            if (mode == 1) {
                ++images;
                if (!direct)
                    o.fail(p.name + ": coboundary rejected");
            }
        }
    }
    o.detail << total << " infinitesimals (" << passing << " pass, " << images << " coboundaries)";
}

TotalCochain2 random_cocycle(const MrbContext &ctx, std::mt19937_64 &rng)
{
    const auto mats = complex_matrices(ComplexKind::MRBLY, 2, ctx.rep(), ctx.r());
    Vector v = zero_vector(TotalCochain2::size(ctx.dim(), ctx.dim_v()));
    for (const auto &k : kernel_basis(mats.outgoing))
        axpy(v, random_small_scalar(rng), k);
    return TotalCochain2::unflatten(ctx.dim(), ctx.dim_v(), v);
}

void round_trip(Outcome &o, std::uint64_t seed)
{
    std::mt19937_64 rng(seed + 1);
    std::size_t count = 0;
    for (const auto &p : corpus::pairs()) {
        const MrbContext ctx = adjoint_ctx(p);
        const AbelianExtension zero = extension_from_cocycle(ctx, TotalCochain2::zero(ctx.dim(), ctx.dim_v()));
        if (!(zero.total == semidirect_product(p.algebra, p.op, ctx.rep())))
            o.fail(p.name + ": zero cocycle is not the semidirect product");
        for (int t = 0; t < 5; ++t) {
            ++count;
            const TotalCochain2 c = random_cocycle(ctx, rng);
            const AbelianExtension ext = extension_from_cocycle(ctx, c);
            const SectionData back = cocycle_from_section(ext, canonical_section(ext));
            if (!(back.cocycle == c) || !(back.rep == ctx.rep()))
                o.fail(p.name + ": round trip differs");
        }
    }
    o.detail << count << " cocycles on " << corpus::pairs().size() << " pairs";
}

void sections(Outcome &o, std::uint64_t seed)
{
    std::mt19937_64 rng(seed + 2);
    std::size_t pairs_checked = 0;
    for (const auto &p : corpus::pairs()) {
        const MrbContext ctx = adjoint_ctx(p);
        const std::size_t n = ctx.dim(), m = ctx.dim_v();
        const AbelianExtension ext = extension_from_cocycle(ctx, random_cocycle(ctx, rng));
        const SectionData ref = cocycle_from_section(ext, canonical_section(ext));
        const MrbContext base_ctx(ref.rep, ref.base.op);
        for (int t = 0; t < 20; ++t) {
            const Matrix s1 = canonical_section(ext) + ext.inclusion * test::random_matrix(m, n, rng);
            const Matrix s2 = canonical_section(ext) + ext.inclusion * test::random_matrix(m, n, rng);
            ++pairs_checked;
            // Recompute lambda = i^-1 (s1 - s2) independently of the library.
            const Matrix diff = s1 - s2;
            Cochain1 lambda = Cochain1::zero(n, m);
            for (std::size_t u = 0; u < m; ++u)
                for (std::size_t x = 0; x < n; ++x)
                    lambda.h(u, x) = diff(ext.ideal[u], x);
            const TotalCochain2 c1 = cocycle_from_section(ext, s1).cocycle;
            const TotalCochain2 c2 = cocycle_from_section(ext, s2).cocycle;
            const TotalCochain2 expected = d1(base_ctx, lambda);
            if (!(c1.flatten() - c2.flatten() == expected.flatten()))
                o.fail(p.name + ": cocycles do not differ by d1(lambda)");
            if (!(sections_cohomologous(ext, s1, s2) == lambda))
                o.fail(p.name + ": library lambda differs");
        }
    }

    // Partition on the 2-dim example with R = [[1,3],[0,2]], where dim H^2 = 2.
    const MrbContext ctx(adjoint_mrb_representation(corpus::ly2(), corpus::ly2_operator(2, 3)),
                         corpus::ly2_operator(2, 3));
    const std::size_t n = 2, m = 2;
    const auto mats = complex_matrices(ComplexKind::MRBLY, 2, ctx.rep(), ctx.r());
    Matrix span = mats.incoming;
    std::vector<Vector> reps;
    for (const auto &k : kernel_basis(mats.outgoing))
        if (!in_column_span(span, k)) {
            reps.push_back(k);
            span = hstack(span, Matrix::from_columns(k.size(), {k}));
        }
    if (reps.empty())
        o.fail("partition instance has trivial H^2");
    struct Item
    {
        TotalCochain2 c;
        std::vector<Scalar> cls;
    };
    std::vector<Item> items;
    const std::vector<std::vector<Scalar>> classes{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, -1}, {Scalar(1, 2), 3}};
    for (const auto &cls : classes)
        for (int t = 0; t < 3; ++t) {
            Vector v = zero_vector(TotalCochain2::size(n, m));
            for (std::size_t r = 0; r < reps.size() && r < cls.size(); ++r)
                axpy(v, cls[r], reps[r]);
            const std::vector<Scalar> key(cls.begin(), cls.begin() + std::min(cls.size(), reps.size()));
            items.push_back({TotalCochain2::unflatten(n, m, v) + d1(ctx, random_cochain1(n, m, rng)), key});
        }
    std::size_t compared = 0;
    for (const auto &a : items)
        for (const auto &b : items) {
            ++compared;
            if (extensions_equivalent(ctx, a.c, b.c).has_value() != (a.cls == b.cls))
                o.fail("equivalence partition differs from H^2 classes");
        }
    o.detail << pairs_checked << " section pairs, dim H^2 = " << reps.size() << ", " << items.size()
             << " cocycles in " << classes.size() << " classes, " << compared << " comparisons";
}

} // namespace

int main()
{
    const std::uint64_t seed = test::seed();
    std::cout << "seed " << seed << "\n";
    struct Criterion
    {
        const char *label;
        std::function<void(Outcome &)> run;
    };
    const std::vector<Criterion> criteria{
        {"1 example algebras satisfy LY1-LY6", examples_pass},
        {"2 operator families and identity are modified Rota-Baxter", operator_families},
        {"3 weight -1 operators transport to 2T - id", transport},
        {"4 Nijenhuis and modified Rota-Baxter agree on involutions", nijenhuis},
        {"5 differentials square to zero and Phi is a chain map", matrix_identities},
        {"6 partial1 equals delta1 over the descendant", delegation},
        {"7 rank strategies agree, rank-nullity holds", strategies},
        {"8 deformation verdicts agree", [&](Outcome &o) { deformations(o, seed); }},
        {"9 extension round trip", [&](Outcome &o) { round_trip(o, seed); }},
        {"10 section independence and equivalence partition", [&](Outcome &o) { sections(o, seed); }},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.ok ? "PASS " : "FAIL ") << c.label << " [" << o.detail.str() << "; "
                  << std::fixed << std::setprecision(2) << secs << " s]\n";
        failures += !o.ok;
    }
    return failures == 0 ? 0 : 1;
}
