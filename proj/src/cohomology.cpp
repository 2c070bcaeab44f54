#include "lyt/cohomology.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>

namespace lyt
{

namespace
{

Vector br2(const LYAlgebra &a, std::size_t i, std::size_t j)
{
    Vector out(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k)
        out[k] = a.binary(i, j, k);
    return out;
}

Vector br3(const LYAlgebra &a, std::size_t i, std::size_t j, std::size_t k)
{
    Vector out(a.dim());
    for (std::size_t l = 0; l < a.dim(); ++l)
        out[l] = a.ternary(i, j, k, l);
    return out;
}

// Partial evaluations of a Cochain2 with one slot given by a vector.
Vector f_first(const Cochain2 &c, const Vector &v, std::size_t y)
{
    Vector out = zero_vector(c.dim_v());
    for (std::size_t p = 0; p < v.size(); ++p)
        if (!v[p].is_zero())
            axpy(out, v[p], c.f(p, y));
    return out;
}

Vector g_first(const Cochain2 &c, const Vector &v, std::size_t y, std::size_t z)
{
    Vector out = zero_vector(c.dim_v());
    for (std::size_t p = 0; p < v.size(); ++p)
        if (!v[p].is_zero())
            axpy(out, v[p], c.g(p, y, z));
    return out;
}

Vector g_second(const Cochain2 &c, std::size_t x, const Vector &v, std::size_t z)
{
    Vector out = zero_vector(c.dim_v());
    for (std::size_t p = 0; p < v.size(); ++p)
        if (!v[p].is_zero())
            axpy(out, v[p], c.g(x, p, z));
    return out;
}

Vector g_third(const Cochain2 &c, std::size_t x, std::size_t y, const Vector &v)
{
    Vector out = zero_vector(c.dim_v());
    for (std::size_t p = 0; p < v.size(); ++p)
        if (!v[p].is_zero())
            axpy(out, v[p], c.g(x, y, p));
    return out;
}

void check_cochain1(const Cochain1 &h, std::size_t n, std::size_t m)
{
    if (h.h.rows() != m || h.h.cols() != n)
        throw InputError("Cochain1: expected a " + std::to_string(m) + "x" + std::to_string(n) +
                         " matrix");
}

void check_cochain2(const Cochain2 &c, std::size_t n, std::size_t m)
{
    if (c.dim() != n || c.dim_v() != m)
        throw InputError("Cochain2: shape does not match the representation");
}

// Action data of the induced representation and the descendant brackets,
// evaluated from the original data rather than through the induced objects.
struct DirectInduced
{
    std::vector<Matrix> rho;   // n
    std::vector<Matrix> theta; // n*n
    std::vector<Matrix> d;     // n*n
    std::vector<Vector> bin;   // n*n, [e_i, e_j]_R
    std::vector<Vector> tern;  // n*n*n, {e_i, e_j, e_k}_R
};

DirectInduced direct_induced(const MrbContext &ctx)
{
    const auto &rep = ctx.rep();
    const auto &a = ctx.algebra();
    const auto &r = ctx.r();
    const auto &rv = ctx.rv();
    const std::size_t n = ctx.dim();
    std::vector<Vector> e, re;
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back(unit_vector(n, i));
        re.push_back(r.column(i));
    }
    DirectInduced out;
    for (std::size_t x = 0; x < n; ++x)
        out.rho.push_back(rep.rho_of(re[x]) - rv * rep.rho(x));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            out.theta.push_back(rep.theta_of(re[x], re[y]) -
                                rv * (rep.theta_of(re[x], e[y]) + rep.theta_of(e[x], re[y])) +
                                rep.theta(x, y));
            out.d.push_back(rep.d_of(re[x], re[y]) -
                            rv * (rep.d_of(re[x], e[y]) + rep.d_of(e[x], re[y])) + rep.d(x, y));
            out.bin.push_back(a.bracket2(re[x], e[y]) + a.bracket2(e[x], re[y]));
            for (std::size_t z = 0; z < n; ++z)
                out.tern.push_back(a.bracket3(e[x], re[y], re[z]) + a.bracket3(re[x], e[y], re[z]) +
                                   a.bracket3(re[x], re[y], e[z]) + a.bracket3(e[x], e[y], e[z]));
        }
    return out;
}

Matrix assemble(std::size_t rows, std::size_t cols, const std::function<Vector(std::size_t)> &column,
                unsigned threads)
{
    Matrix out(rows, cols);
    auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            Vector v = column(j);
            if (v.size() != rows)
                throw InternalError("matrix_of: column has wrong length");
            for (std::size_t i = 0; i < rows; ++i)
                if (!v[i].is_zero())
                    out(i, j) = std::move(v[i]);
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cols)));
    if (workers <= 1) {
        fill(0, cols);
        return out;
    }
    // Each worker writes a disjoint column range.
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (cols + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk, end = std::min(cols, begin + chunk);
        pool.emplace_back([&, w, begin, end] {
            try {
                fill(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : pool)
        t.join();
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

Matrix top_rows(const Matrix &m, std::size_t k)
{
    Matrix out(k, m.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j);
    return out;
}

} // namespace

MrbContext::MrbContext(Representation rep, LinearOperator r)
    : rep_(std::move(rep)), r_(std::move(r)), induced_(induced_representation(rep_, r_))
{
}

Cochain2 delta1(const Representation &rep, const Cochain1 &h)
{
    const auto &a = rep.algebra();
    const std::size_t n = rep.dim(), m = rep.dim_v();
    check_cochain1(h, n, m);
    std::vector<Vector> hc;
    for (std::size_t s = 0; s < n; ++s)
        hc.push_back(h.h.column(s));
    Cochain2 out(n, m);
    for (std::size_t w = 0; w < wedge_count(n); ++w) {
        auto [i, j] = wedge_pair(w, n);
        out.set_f(i, j, rep.rho(i).apply(hc[j]) - rep.rho(j).apply(hc[i]) - h.h.apply(br2(a, i, j)));
        for (std::size_t k = 0; k < n; ++k)
            out.set_g(i, j, k,
                      rep.d(i, j).apply(hc[k]) + rep.theta(j, k).apply(hc[i]) -
                          rep.theta(i, k).apply(hc[j]) - h.h.apply(br3(a, i, j, k)));
    }
    return out;
}

Cochain3 delta2(const Representation &rep, const Cochain2 &c)
{
    const auto &A = rep.algebra();
    const std::size_t n = rep.dim(), m = rep.dim_v();
    check_cochain2(c, n, m);
    Cochain3 out(n, m);
    const std::size_t W = wedge_count(n);
    for (std::size_t w1 = 0; w1 < W; ++w1) {
        auto [a, b] = wedge_pair(w1, n);
        for (std::size_t w2 = 0; w2 < W; ++w2) {
            auto [x, y] = wedge_pair(w2, n);
            const Vector abx = br3(A, a, b, x), aby = br3(A, a, b, y);
            Vector fi = rep.rho(y).apply(c.g(a, b, x)) - rep.rho(x).apply(c.g(a, b, y)) +
                        g_third(c, a, b, br2(A, x, y)) + rep.d(a, b).apply(c.f(x, y));
            fi = fi - f_first(c, abx, y) + f_first(c, aby, x);
            out.set_f(a, b, x, y, fi);
            for (std::size_t z = 0; z < n; ++z) {
                Vector gi = rep.theta(x, z).apply(c.g(a, b, y)) - rep.theta(y, z).apply(c.g(a, b, x)) +
                            rep.d(a, b).apply(c.g(x, y, z)) - rep.d(x, y).apply(c.g(a, b, z));
                gi = gi - g_first(c, abx, y, z) - g_second(c, x, aby, z) -
                     g_third(c, x, y, br3(A, a, b, z)) + g_third(c, a, b, br3(A, x, y, z));
                out.set_g(a, b, x, y, z, gi);
            }
        }
    }
    return out;
}

std::size_t aux2_size(std::size_t n, std::size_t m)
{
    const std::size_t t = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
    return t * m * (1 + n);
}

Vector aux2(const Representation &rep, const Cochain2 &c)
{
    const auto &A = rep.algebra();
    const std::size_t n = rep.dim(), m = rep.dim_v();
    check_cochain2(c, n, m);
    Vector out(aux2_size(n, m));
    const std::size_t T = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k, ++t) {
                const std::size_t cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
                Vector first = zero_vector(m);
                std::vector<Vector> second(n, zero_vector(m));
                for (const auto &xyz : cyc) {
                    const std::size_t x = xyz[0], y = xyz[1], z = xyz[2];
                    const Vector xy = br2(A, x, y);
                    const Vector nu = c.f(x, y);
                    first = first + f_first(c, xy, z) - rep.rho(z).apply(nu) + c.g(x, y, z);
                    for (std::size_t l = 0; l < n; ++l)
                        second[l] = second[l] + g_first(c, xy, z, l) + rep.theta(z, l).apply(nu);
                }
                for (std::size_t a = 0; a < m; ++a)
                    out[t * m + a] = first[a];
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t a = 0; a < m; ++a)
                        out[T * m + (t * n + l) * m + a] = second[l][a];
            }
    return out;
}

Cochain2 partial1(const MrbContext &ctx, const Cochain1 &h)
{
    const std::size_t n = ctx.dim(), m = ctx.dim_v();
    check_cochain1(h, n, m);
    const DirectInduced ind = direct_induced(ctx);
    std::vector<Vector> hc;
    for (std::size_t s = 0; s < n; ++s)
        hc.push_back(h.h.column(s));
    Cochain2 out(n, m);
    for (std::size_t w = 0; w < wedge_count(n); ++w) {
        auto [i, j] = wedge_pair(w, n);
        out.set_f(i, j,
                  ind.rho[i].apply(hc[j]) - ind.rho[j].apply(hc[i]) - h.h.apply(ind.bin[i * n + j]));
        for (std::size_t k = 0; k < n; ++k)
            out.set_g(i, j, k,
                      ind.d[i * n + j].apply(hc[k]) + ind.theta[j * n + k].apply(hc[i]) -
                          ind.theta[i * n + k].apply(hc[j]) -
                          h.h.apply(ind.tern[(i * n + j) * n + k]));
    }
    return out;
}

Cochain3 partial2(const MrbContext &ctx, const Cochain2 &c) { return delta2(ctx.induced(), c); }

Cochain1 phi1(const MrbContext &ctx, const Cochain1 &h)
{
    check_cochain1(h, ctx.dim(), ctx.dim_v());
    return {h.h * ctx.r() - ctx.rv() * h.h};
}

Cochain2 phi2(const MrbContext &ctx, const Cochain2 &c)
{
    const std::size_t n = ctx.dim(), m = ctx.dim_v();
    check_cochain2(c, n, m);
    const Matrix &rv = ctx.rv();
    std::vector<Vector> e, re;
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back(unit_vector(n, i));
        re.push_back(ctx.r().column(i));
    }
    Cochain2 out(n, m);
    for (std::size_t w = 0; w < wedge_count(n); ++w) {
        auto [x, y] = wedge_pair(w, n);
        out.set_f(x, y,
                  c.eval_f(re[x], re[y]) -
                      rv.apply(c.eval_f(re[x], e[y]) + c.eval_f(e[x], re[y])) + c.f(x, y));
        for (std::size_t z = 0; z < n; ++z) {
            Vector inner = c.eval_g(re[x], re[y], e[z]) + c.eval_g(re[x], e[y], re[z]) +
                           c.eval_g(e[x], re[y], re[z]) + c.g(x, y, z);
            out.set_g(x, y, z,
                      c.eval_g(re[x], re[y], re[z]) - rv.apply(inner) + c.eval_g(re[x], e[y], e[z]) +
                          c.eval_g(e[x], re[y], e[z]) + c.eval_g(e[x], e[y], re[z]));
        }
    }
    return out;
}

TotalCochain2 d1(const MrbContext &ctx, const Cochain1 &h)
{
    return {delta1(ctx.rep(), h), {-phi1(ctx, h).h}};
}

TotalCochain3 d2(const MrbContext &ctx, const TotalCochain2 &c)
{
    Cochain2 op = Cochain2(ctx.dim(), ctx.dim_v()) - partial1(ctx, c.op) - phi2(ctx, c.ly);
    return {delta2(ctx.rep(), c.ly), std::move(op)};
}

Vector total_aux2(const MrbContext &ctx, const TotalCochain2 &c) { return aux2(ctx.rep(), c.ly); }

std::string to_string(Differential d)
{
    switch (d) {
    case Differential::Delta1: return "delta1";
    case Differential::Delta2: return "delta2";
    case Differential::Aux2: return "aux2";
    case Differential::Partial1: return "partial1";
    case Differential::Partial2: return "partial2";
    case Differential::PartialAux2: return "partial-aux2";
    case Differential::Phi1: return "phi1";
    case Differential::Phi2: return "phi2";
    case Differential::D1: return "d1";
    case Differential::D2: return "d2";
    case Differential::TotalAux2: return "total-aux2";
    }
    return "?";
}

Differential parse_differential(std::string_view tag)
{
    for (int i = 0; i <= static_cast<int>(Differential::TotalAux2); ++i) {
        auto d = static_cast<Differential>(i);
        if (to_string(d) == tag)
            return d;
    }
    throw InputError("unknown differential '" + std::string(tag) + "'");
}

bool needs_operator(Differential d)
{
    return !(d == Differential::Delta1 || d == Differential::Delta2 || d == Differential::Aux2);
}

Matrix matrix_of(Differential d, const Representation &rep, unsigned threads)
{
    if (needs_operator(d))
        throw InputError("matrix_of: '" + to_string(d) + "' needs an operator");
    const std::size_t n = rep.dim(), m = rep.dim_v();
    const std::size_t c1 = n * m, c2 = Cochain2::size(n, m), c3 = Cochain3::size(n, m);
    auto unit = [](std::size_t size, std::size_t j) { return unit_vector(size, j); };
    switch (d) {
    case Differential::Delta1:
        return assemble(c2, c1, [&](std::size_t j) {
            return delta1(rep, Cochain1::unflatten(n, m, unit(c1, j))).flatten();
        }, threads);
    case Differential::Delta2:
        return assemble(c3, c2, [&](std::size_t j) {
            return delta2(rep, Cochain2::unflatten(n, m, unit(c2, j))).flatten();
        }, threads);
    default:
        return assemble(aux2_size(n, m), c2, [&](std::size_t j) {
            return aux2(rep, Cochain2::unflatten(n, m, unit(c2, j)));
        }, threads);
    }
}

Matrix matrix_of(Differential d, const MrbContext &ctx, unsigned threads)
{
    const std::size_t n = ctx.dim(), m = ctx.dim_v();
    const std::size_t c1 = n * m, c2 = Cochain2::size(n, m), c3 = Cochain3::size(n, m),
                      t2 = TotalCochain2::size(n, m);
    auto c1_of = [&](std::size_t j) { return Cochain1::unflatten(n, m, unit_vector(c1, j)); };
    auto c2_of = [&](std::size_t j) { return Cochain2::unflatten(n, m, unit_vector(c2, j)); };
    auto t2_of = [&](std::size_t j) { return TotalCochain2::unflatten(n, m, unit_vector(t2, j)); };
    switch (d) {
    case Differential::Delta1:
    case Differential::Delta2:
    case Differential::Aux2:
        return matrix_of(d, ctx.rep(), threads);
    case Differential::Partial1:
        return assemble(c2, c1, [&](std::size_t j) { return partial1(ctx, c1_of(j)).flatten(); },
                        threads);
    case Differential::Partial2:
        return assemble(c3, c2, [&](std::size_t j) { return partial2(ctx, c2_of(j)).flatten(); },
                        threads);
    case Differential::PartialAux2:
        return matrix_of(Differential::Aux2, ctx.induced(), threads);
    case Differential::Phi1:
        return assemble(c1, c1, [&](std::size_t j) { return phi1(ctx, c1_of(j)).flatten(); },
                        threads);
    case Differential::Phi2:
        return assemble(c2, c2, [&](std::size_t j) { return phi2(ctx, c2_of(j)).flatten(); },
                        threads);
    case Differential::D1:
        return assemble(t2, c1, [&](std::size_t j) { return d1(ctx, c1_of(j)).flatten(); },
                        threads);
    case Differential::D2:
        return assemble(c3 + c2, t2, [&](std::size_t j) { return d2(ctx, t2_of(j)).flatten(); },
                        threads);
    case Differential::TotalAux2:
        return assemble(aux2_size(n, m), t2,
                        [&](std::size_t j) { return total_aux2(ctx, t2_of(j)); }, threads);
    }
    throw InputError("matrix_of: invalid differential");
}

std::string to_string(ComplexKind k)
{
    switch (k) {
    case ComplexKind::LY: return "ly";
    case ComplexKind::MRBO: return "mrbo";
    case ComplexKind::MRBLY: return "mrbly";
    }
    return "?";
}

ComplexKind parse_complex(std::string_view tag)
{
    if (tag == "ly")
        return ComplexKind::LY;
    if (tag == "mrbo")
        return ComplexKind::MRBO;
    if (tag == "mrbly")
        return ComplexKind::MRBLY;
    throw InputError("unknown complex '" + std::string(tag) + "' (expected ly, mrbo or mrbly)");
}

ComplexMatrices complex_matrices(ComplexKind kind, int degree, const Representation &rep,
                                 const std::optional<LinearOperator> &r, unsigned threads)
{
    if (degree != 1 && degree != 2)
        throw InputError("cohomology is available in degrees 1 and 2 only");
    const std::size_t c1 = rep.dim() * rep.dim_v();
    ComplexMatrices out;
    if (kind == ComplexKind::LY) {
        if (degree == 1) {
            out.outgoing = matrix_of(Differential::Delta1, rep, threads);
            out.incoming = Matrix(c1, 0);
        } else {
            out.outgoing = matrix_of(Differential::Delta2, rep, threads);
            out.differential_rows = out.outgoing.rows();
            out.outgoing = vstack(out.outgoing, matrix_of(Differential::Aux2, rep, threads));
            out.incoming = matrix_of(Differential::Delta1, rep, threads);
            return out;
        }
        out.differential_rows = out.outgoing.rows();
        return out;
    }
    if (!r)
        throw InputError("complex '" + to_string(kind) + "' needs an operator");
    const MrbContext ctx(rep, *r);
    const bool mrbo = kind == ComplexKind::MRBO;
    if (degree == 1) {
        out.outgoing = matrix_of(mrbo ? Differential::Partial1 : Differential::D1, ctx, threads);
        out.differential_rows = out.outgoing.rows();
        out.incoming = Matrix(c1, 0);
        return out;
    }
    Matrix diff = matrix_of(mrbo ? Differential::Partial2 : Differential::D2, ctx, threads);
    out.differential_rows = diff.rows();
    out.outgoing =
        vstack(diff, matrix_of(mrbo ? Differential::PartialAux2 : Differential::TotalAux2, ctx, threads));
    out.incoming = matrix_of(mrbo ? Differential::Partial1 : Differential::D1, ctx, threads);
    return out;
}

ComplexReport cohomology_dims(ComplexKind kind, int degree, const Representation &rep,
                              const std::optional<LinearOperator> &r, RankStrategy strategy,
                              unsigned threads)
{
    const ComplexMatrices mats = complex_matrices(kind, degree, rep, r, threads);
    if (mats.incoming.cols() > 0 && !(mats.outgoing * mats.incoming).is_zero())
        throw InternalError("cohomology: coboundaries are not cocycles for complex '" +
                            to_string(kind) + "' in degree " + std::to_string(degree));
    ComplexReport out;
    out.complex = kind;
    out.degree = degree;
    out.strategy = strategy;
    out.dim_cochain = mats.outgoing.cols();
    out.rank_outgoing = rank(mats.outgoing, strategy);
    out.dim_cocycles = out.dim_cochain - out.rank_outgoing;
    out.dim_differential_kernel =
        out.dim_cochain - rank(top_rows(mats.outgoing, mats.differential_rows), strategy);
    out.dim_coboundaries = rank(mats.incoming, strategy);
    if (out.dim_coboundaries > out.dim_cocycles)
        throw InternalError("cohomology: more coboundaries than cocycles");
    out.dim_cohomology = out.dim_cocycles - out.dim_coboundaries;
    return out;
}

} // namespace lyt
