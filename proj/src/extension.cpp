#include "lyt/extension.hpp"

namespace lyt
{

namespace
{

void check_shapes(const AbelianExtension &ext)
{
    const std::size_t N = ext.total.algebra.dim();
    const std::size_t n = ext.projection.rows(), m = ext.inclusion.cols();
    if (ext.projection.cols() != N || ext.inclusion.rows() != N || n + m != N)
        throw InputError("extension: projection must be n x (n+m) and inclusion (n+m) x m");
    if (ext.total.op.rows() != N || ext.total.op.cols() != N)
        throw InputError("extension: operator does not match the total algebra");
    for (auto k : ext.ideal)
        if (k >= N)
            throw InputError("extension: ideal index out of range");
}

// Q with Q i = id and Q s = 0: reads the V-component of E relative to s.
Matrix ideal_coordinates(const AbelianExtension &ext, const Matrix &s)
{
    const std::size_t N = ext.total.algebra.dim(), m = ext.dim_ideal();
    const Matrix complement = Matrix::identity(N) - s * ext.projection;
    Matrix q(m, N);
    for (std::size_t c = 0; c < N; ++c) {
        auto v = solve(ext.inclusion, complement.column(c));
        if (!v)
            throw InputError("extension: kernel of the projection is not the image of the inclusion");
        q.set_column(c, *v);
    }
    return q;
}

void check_section(const AbelianExtension &ext, const Matrix &s)
{
    const std::size_t n = ext.dim_base();
    if (s.rows() != ext.total.algebra.dim() || s.cols() != n)
        throw InputError("section must be (n+m) x n");
    if (!(ext.projection * s == Matrix::identity(n)))
        throw InputError("section: projection composed with s is not the identity");
}

AbelianExtension twisted_extension(const Representation &rep, const LinearOperator &r,
                                   const ExtensionCocycle &c)
{
    const LYAlgebra &a = rep.algebra();
    const std::size_t n = a.dim(), m = rep.dim_v(), N = n + m;
    std::vector<Scalar> bin(N * N * N), ter(N * N * N * N);
    auto cb = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar & {
        return bin[(i * N + j) * N + k];
    };
    auto tb = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> Scalar & {
        return ter[((i * N + j) * N + k) * N + l];
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector nu = c.ly.f(i, j);
            for (std::size_t k = 0; k < n; ++k)
                cb(i, j, k) = a.binary(i, j, k);
            for (std::size_t u = 0; u < m; ++u)
                cb(i, j, n + u) = nu[u];
            for (std::size_t k = 0; k < n; ++k) {
                const Vector psi = c.ly.g(i, j, k);
                for (std::size_t l = 0; l < n; ++l)
                    tb(i, j, k, l) = a.ternary(i, j, k, l);
                for (std::size_t u = 0; u < m; ++u)
                    tb(i, j, k, n + u) = psi[u];
            }
            for (std::size_t u = 0; u < m; ++u)
                for (std::size_t w = 0; w < m; ++w) {
                    tb(i, j, n + u, n + w) = rep.d(i, j)(w, u);
                    tb(i, n + u, j, n + w) = -rep.theta(i, j)(w, u);
                    tb(n + u, i, j, n + w) = rep.theta(i, j)(w, u);
                }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t w = 0; w < m; ++w) {
                cb(i, n + u, n + w) = rep.rho(i)(w, u);
                cb(n + u, i, n + w) = -rep.rho(i)(w, u);
            }

    Matrix op(N, N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            op(i, j) = r(i, j);
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t j = 0; j < n; ++j)
            op(n + u, j) = c.op.h(u, j);
        for (std::size_t w = 0; w < m; ++w)
            op(n + u, n + w) = (*rep.rv())(u, w);
    }

    AbelianExtension ext;
    ext.total = {LYAlgebra::from_tensors(N, std::move(bin), std::move(ter)), std::move(op)};
    for (std::size_t u = 0; u < m; ++u)
        ext.ideal.push_back(n + u);
    ext.projection = Matrix(n, N);
    for (std::size_t i = 0; i < n; ++i)
        ext.projection(i, i) = 1;
    ext.inclusion = Matrix(N, m);
    for (std::size_t u = 0; u < m; ++u)
        ext.inclusion(n + u, u) = 1;
    return ext;
}

} // namespace

AxiomReport check_extension(const AbelianExtension &ext, std::size_t max_violations)
{
    check_shapes(ext);
    const LYAlgebra &E = ext.total.algebra;
    const Matrix &p = ext.projection, &inc = ext.inclusion, &op = ext.total.op;
    const std::size_t N = E.dim(), n = ext.dim_base(), m = ext.dim_ideal();

    AxiomReport out = check_ly_axioms(E, max_violations);
    out.merge(check_modified_rb(E, op, max_violations), max_violations);

    ReportBuilder rb(max_violations);
    auto run = [&] {
        if (!rb.expect_equal("ext-exact", {}, (p * inc).data(), Matrix(n, m).data()))
            return;
        if (rank(p) != n)
            rb.add({"ext-onto", {}, {Scalar(static_cast<long>(rank(p)))}, {Scalar(static_cast<long>(n))}});
        if (rank(inc) != m)
            rb.add({"ext-one-to-one", {}, {Scalar(static_cast<long>(rank(inc)))},
                    {Scalar(static_cast<long>(m))}});
        if (rb.full())
            return;
        std::vector<Vector> iu, e;
        for (std::size_t u = 0; u < m; ++u)
            iu.push_back(inc.column(u));
        for (std::size_t c = 0; c < N; ++c)
            e.push_back(unit_vector(N, c));
        const Vector zero_n = zero_vector(n), zero_N = zero_vector(N);
        for (std::size_t u = 0; u < m; ++u) {
            if (!rb.expect_equal("ext-operator", {u}, p.apply(op.apply(iu[u])), zero_n))
                return;
            for (std::size_t c = 0; c < N; ++c) {
                if (!rb.expect_equal("ext-ideal", {u, c}, p.apply(E.bracket2(iu[u], e[c])), zero_n))
                    return;
                for (std::size_t d = 0; d < N; ++d) {
                    if (!rb.expect_equal("ext-ideal", {u, c, d},
                                         p.apply(E.bracket3(iu[u], e[c], e[d])), zero_n) ||
                        !rb.expect_equal("ext-ideal", {c, u, d},
                                         p.apply(E.bracket3(e[c], iu[u], e[d])), zero_n) ||
                        !rb.expect_equal("ext-ideal", {c, d, u},
                                         p.apply(E.bracket3(e[c], e[d], iu[u])), zero_n))
                        return;
                }
            }
            for (std::size_t v = 0; v < m; ++v) {
                if (!rb.expect_equal("ext-abelian", {u, v}, E.bracket2(iu[u], iu[v]), zero_N))
                    return;
                for (std::size_t c = 0; c < N; ++c)
                    if (!rb.expect_equal("ext-abelian", {u, v, c}, E.bracket3(iu[u], iu[v], e[c]), zero_N) ||
                        !rb.expect_equal("ext-abelian", {u, c, v}, E.bracket3(iu[u], e[c], iu[v]), zero_N) ||
                        !rb.expect_equal("ext-abelian", {c, u, v}, E.bracket3(e[c], iu[u], iu[v]), zero_N))
                        return;
            }
        }
        if (!ext.ideal.empty()) {
            if (ext.ideal.size() != m)
                rb.add({"ext-ideal-basis", {}, {Scalar(static_cast<long>(ext.ideal.size()))},
                        {Scalar(static_cast<long>(m))}});
            for (auto k : ext.ideal)
                if (!rb.expect_equal("ext-ideal-basis", {k}, p.apply(e[k]), zero_n))
                    return;
        }
    };
    run();
    out.merge(std::move(rb).finish(), max_violations);
    return out;
}

AxiomReport check_extension_cocycle(const MrbContext &ctx, const ExtensionCocycle &c,
                                    std::size_t max_violations)
{
    const std::size_t n = ctx.dim(), m = ctx.dim_v();
    if (c.ly.dim() != n || c.ly.dim_v() != m || c.op.h.rows() != m || c.op.h.cols() != n)
        throw InputError("cocycle: shape does not match the representation");
    ReportBuilder rb(max_violations);
    const Vector d2v = d2(ctx, c).flatten();
    const Vector aux = total_aux2(ctx, c);
    for (std::size_t row = 0; row < d2v.size() && !rb.full(); ++row)
        if (!d2v[row].is_zero())
            rb.add({"cocycle-d2", {row}, {d2v[row]}, {Scalar(0)}});
    for (std::size_t row = 0; row < aux.size() && !rb.full(); ++row)
        if (!aux[row].is_zero())
            rb.add({"cocycle-aux2", {row}, {aux[row]}, {Scalar(0)}});
    return std::move(rb).finish();
}

AbelianExtension extension_from_cocycle(const MrbContext &ctx, const ExtensionCocycle &c)
{
    AxiomReport gate = check_extension_cocycle(ctx, c);
    if (!gate.passed)
        throw CheckFailure("extension_from_cocycle: not a 2-cocycle", gate);
    AbelianExtension ext = twisted_extension(ctx.rep(), ctx.r(), c);
    AxiomReport built = check_extension(ext);
    if (!built.passed)
        throw InternalError("extension_from_cocycle: a cocycle produced an invalid extension (" +
                            built.violations.front().axiom + ")");
    return ext;
}

Matrix canonical_section(const AbelianExtension &ext)
{
    const std::size_t n = ext.dim_base();
    Matrix s(ext.total.algebra.dim(), n);
    for (std::size_t i = 0; i < n; ++i)
        s(i, i) = 1;
    return s;
}

SectionData cocycle_from_section(const AbelianExtension &ext, const Matrix &s)
{
    check_shapes(ext);
    check_section(ext, s);
    AxiomReport valid = check_extension(ext);
    if (!valid.passed)
        throw CheckFailure("cocycle_from_section: not an abelian extension", valid);

    const LYAlgebra &E = ext.total.algebra;
    const Matrix &p = ext.projection, &inc = ext.inclusion, &op = ext.total.op;
    const std::size_t n = ext.dim_base(), m = ext.dim_ideal();
    const Matrix q = ideal_coordinates(ext, s);

    std::vector<Vector> sx, iu;
    for (std::size_t i = 0; i < n; ++i)
        sx.push_back(s.column(i));
    for (std::size_t u = 0; u < m; ++u)
        iu.push_back(inc.column(u));

    // Base algebra and operator through the section.
    std::vector<Scalar> bin(n * n * n), ter(n * n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector b = p.apply(E.bracket2(sx[i], sx[j]));
            for (std::size_t k = 0; k < n; ++k)
                bin[(i * n + j) * n + k] = b[k];
            for (std::size_t k = 0; k < n; ++k) {
                const Vector t = p.apply(E.bracket3(sx[i], sx[j], sx[k]));
                for (std::size_t l = 0; l < n; ++l)
                    ter[((i * n + j) * n + k) * n + l] = t[l];
            }
        }
    LYAlgebra base = LYAlgebra::from_tensors(n, std::move(bin), std::move(ter));
    LinearOperator r = p * op * s;

    std::vector<Matrix> rho, theta, d;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix rm(m, m);
        for (std::size_t u = 0; u < m; ++u)
            rm.set_column(u, q.apply(E.bracket2(sx[i], iu[u])));
        rho.push_back(std::move(rm));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix tm(m, m), dm(m, m);
            for (std::size_t u = 0; u < m; ++u) {
                tm.set_column(u, q.apply(E.bracket3(iu[u], sx[i], sx[j])));
                dm.set_column(u, q.apply(E.bracket3(sx[i], sx[j], iu[u])));
            }
            theta.push_back(std::move(tm));
            d.push_back(std::move(dm));
        }
    Matrix rv = q * op * inc;
    Representation rep(base, m, std::move(rho), std::move(theta), std::move(d), rv);

    // D is taken from the ternary bracket; R1 must then hold on its own.
    AxiomReport rep_check = validate_mrb_representation(rep, r);
    if (!rep_check.passed)
        throw InternalError("cocycle_from_section: extracted representation fails " +
                            rep_check.violations.front().axiom);

    ExtensionCocycle c = TotalCochain2::zero(n, m);
    for (std::size_t w = 0; w < wedge_count(n); ++w) {
        auto [i, j] = wedge_pair(w, n);
        c.ly.set_f(i, j, q.apply(E.bracket2(sx[i], sx[j])));
        for (std::size_t k = 0; k < n; ++k)
            c.ly.set_g(i, j, k, q.apply(E.bracket3(sx[i], sx[j], sx[k])));
    }
    c.op.h = q * op * s;

    MrbContext ctx(rep, r);
    AxiomReport cocycle = check_extension_cocycle(ctx, c);
    if (!cocycle.passed)
        throw InternalError("cocycle_from_section: extracted cochain is not a cocycle (" +
                            cocycle.violations.front().axiom + ")");
    return {{std::move(base), std::move(r)}, std::move(rep), std::move(c)};
}

Cochain1 sections_cohomologous(const AbelianExtension &ext, const Matrix &s1, const Matrix &s2)
{
    check_shapes(ext);
    check_section(ext, s1);
    check_section(ext, s2);
    const SectionData a = cocycle_from_section(ext, s1), b = cocycle_from_section(ext, s2);
    if (!(a.rep == b.rep) || !(a.base == b.base))
        throw InternalError("sections_cohomologous: sections induce different representations");
    const Matrix q = ideal_coordinates(ext, s2);
    Cochain1 lambda{q * (s1 - s2)};
    MrbContext ctx(a.rep, a.base.op);
    if (!(a.cocycle - b.cocycle == d1(ctx, lambda)))
        throw InternalError("sections_cohomologous: cocycles do not differ by d1(lambda)");
    return lambda;
}

AxiomReport check_homomorphism(const MRBLYAlgebra &from, const MRBLYAlgebra &to, const Matrix &phi,
                               std::size_t max_violations)
{
    const std::size_t N = from.algebra.dim();
    if (phi.cols() != N || phi.rows() != to.algebra.dim())
        throw InputError("homomorphism: matrix shape does not match the algebras");
    ReportBuilder rb(max_violations);
    std::vector<Vector> e, pe;
    for (std::size_t c = 0; c < N; ++c) {
        e.push_back(unit_vector(N, c));
        pe.push_back(phi.column(c));
    }
    auto run = [&] {
        for (std::size_t i = 0; i < N; ++i) {
            if (!rb.expect_equal("hom-operator", {i}, phi.apply(from.op.apply(e[i])),
                                 to.op.apply(pe[i])))
                return;
            for (std::size_t j = 0; j < N; ++j) {
                if (!rb.expect_equal("hom-binary", {i, j}, phi.apply(from.algebra.bracket2(e[i], e[j])),
                                     to.algebra.bracket2(pe[i], pe[j])))
                    return;
                for (std::size_t k = 0; k < N; ++k)
                    if (!rb.expect_equal("hom-ternary", {i, j, k},
                                         phi.apply(from.algebra.bracket3(e[i], e[j], e[k])),
                                         to.algebra.bracket3(pe[i], pe[j], pe[k])))
                        return;
            }
        }
    };
    run();
    return std::move(rb).finish();
}

std::optional<Matrix> extensions_equivalent(const MrbContext &ctx, const ExtensionCocycle &c1,
                                            const ExtensionCocycle &c2)
{
    for (const ExtensionCocycle *c : {&c1, &c2}) {
        AxiomReport rep = check_extension_cocycle(ctx, *c);
        if (!rep.passed)
            throw CheckFailure("extensions_equivalent: argument is not a 2-cocycle", rep);
    }
    const std::size_t n = ctx.dim(), m = ctx.dim_v(), N = n + m;
    auto x = solve(matrix_of(Differential::D1, ctx), (c1 - c2).flatten());
    if (!x)
        return std::nullopt;
    const Cochain1 lambda = Cochain1::unflatten(n, m, *x);

    Matrix phi = Matrix::identity(N);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t j = 0; j < n; ++j)
            phi(n + u, j) = lambda.h(u, j);

    const AbelianExtension e1 = extension_from_cocycle(ctx, c1), e2 = extension_from_cocycle(ctx, c2);
    AxiomReport hom = check_homomorphism(e1.total, e2.total, phi);
    if (!hom.passed)
        throw InternalError("extensions_equivalent: phi is not a homomorphism (" +
                            hom.violations.front().axiom + ")");
    if (!(e2.projection * phi == e1.projection) || !(phi * e1.inclusion == e2.inclusion))
        throw InternalError("extensions_equivalent: phi does not commute with the sequences");
    return phi;
}

} // namespace lyt
