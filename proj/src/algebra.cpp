#include "lyt/algebra.hpp"

#include <limits>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <tuple>

namespace lyt
{

namespace
{

void check_vector_length(const Vector &v, std::size_t dim, const char *what)
{
    if (v.size() != dim)
        throw InputError(std::string(what) + ": coefficient vector has length " +
                         std::to_string(v.size()) + ", expected " + std::to_string(dim));
}

void check_square(const LinearOperator &op, std::size_t dim, const char *what)
{
    if (op.rows() != dim || op.cols() != dim)
        throw InputError(std::string(what) + ": operator must be " + std::to_string(dim) + "x" +
                         std::to_string(dim));
}

} // namespace

LYAlgebra LYAlgebra::from_tensors(std::size_t dim, std::vector<Scalar> binary,
                                  std::vector<Scalar> ternary)
{
    if (binary.size() != dim * dim * dim || ternary.size() != dim * dim * dim * dim)
        throw InputError("structure tensor size mismatch");
    LYAlgebra a;
    a.dim_ = dim;
    a.c_ = std::move(binary);
    a.t_ = std::move(ternary);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                if (a.binary(i, j, k) != -a.binary(j, i, k))
                    throw InputError("binary bracket is not antisymmetric at (" + std::to_string(i) +
                                     "," + std::to_string(j) + ")");
                for (std::size_t l = 0; l < dim; ++l)
                    if (a.ternary(i, j, k, l) != -a.ternary(j, i, k, l))
                        throw InputError("ternary bracket is not antisymmetric in its first two "
                                         "slots at (" +
                                         std::to_string(i) + "," + std::to_string(j) + "," +
                                         std::to_string(k) + ")");
            }
    return a;
}

Vector LYAlgebra::bracket2(std::span<const Scalar> x, std::span<const Scalar> y) const
{
    if (x.size() != dim_ || y.size() != dim_)
        throw InputError("bracket2: dimension mismatch");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero() || i == j)
                continue;
            Scalar coef = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Scalar &c = binary(i, j, k);
                if (!c.is_zero())
                    out[k] += coef * c;
            }
        }
    }
    return out;
}

Vector LYAlgebra::bracket3(std::span<const Scalar> x, std::span<const Scalar> y,
                           std::span<const Scalar> z) const
{
    if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_)
        throw InputError("bracket3: dimension mismatch");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero() || i == j)
                continue;
            Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                if (z[k].is_zero())
                    continue;
                Scalar coef = xy * z[k];
                for (std::size_t l = 0; l < dim_; ++l) {
                    const Scalar &t = ternary(i, j, k, l);
                    if (!t.is_zero())
                        out[l] += coef * t;
                }
            }
        }
    }
    return out;
}

std::vector<BinaryEntry> LYAlgebra::binary_entries() const
{
    std::vector<BinaryEntry> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) {
            Vector v(c_.begin() + (i * dim_ + j) * dim_, c_.begin() + (i * dim_ + j + 1) * dim_);
            if (!is_zero(v))
                out.push_back({i, j, std::move(v)});
        }
    return out;
}

std::vector<TernaryEntry> LYAlgebra::ternary_entries() const
{
    std::vector<TernaryEntry> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                auto base = ((i * dim_ + j) * dim_ + k) * dim_;
                Vector v(t_.begin() + base, t_.begin() + base + dim_);
                if (!is_zero(v))
                    out.push_back({i, j, k, std::move(v)});
            }
    return out;
}

bool LYAlgebra::is_abelian() const
{
    return is_zero(c_) && is_zero(t_);
}

LYAlgebra make_algebra(std::size_t dim, const std::vector<BinaryEntry> &binary,
                       const std::vector<TernaryEntry> &ternary)
{
    std::vector<Scalar> c(dim * dim * dim), t(dim * dim * dim * dim);
    std::set<std::pair<std::size_t, std::size_t>> seen2;
    for (const auto &e : binary) {
        if (e.i >= dim || e.j >= dim)
            throw InputError("binary entry index out of range");
        check_vector_length(e.value, dim, "binary entry");
        if (e.i == e.j) {
            if (!is_zero(e.value))
                throw InputError("binary entry (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                 ") with nonzero value violates LY1");
            continue;
        }
        if (e.i > e.j)
            throw InputError("binary entry requires i < j");
        if (!seen2.insert({e.i, e.j}).second)
            throw InputError("duplicate binary entry (" + std::to_string(e.i) + "," +
                             std::to_string(e.j) + ")");
        for (std::size_t k = 0; k < dim; ++k) {
            c[(e.i * dim + e.j) * dim + k] = e.value[k];
            c[(e.j * dim + e.i) * dim + k] = -e.value[k];
        }
    }
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen3;
    for (const auto &e : ternary) {
        if (e.i >= dim || e.j >= dim || e.k >= dim)
            throw InputError("ternary entry index out of range");
        check_vector_length(e.value, dim, "ternary entry");
        if (e.i == e.j) {
            if (!is_zero(e.value))
                throw InputError("ternary entry with equal first two indices and nonzero value "
                                 "violates LY2");
            continue;
        }
        if (e.i > e.j)
            throw InputError("ternary entry requires i < j");
        if (!seen3.insert({e.i, e.j, e.k}).second)
            throw InputError("duplicate ternary entry (" + std::to_string(e.i) + "," +
                             std::to_string(e.j) + "," + std::to_string(e.k) + ")");
        for (std::size_t l = 0; l < dim; ++l) {
            t[((e.i * dim + e.j) * dim + e.k) * dim + l] = e.value[l];
            t[((e.j * dim + e.i) * dim + e.k) * dim + l] = -e.value[l];
        }
    }
    return LYAlgebra::from_tensors(dim, std::move(c), std::move(t));
}

AxiomReport check_ly_axioms(const LYAlgebra &a, std::size_t max_violations)
{
    const std::size_t n = a.dim();
    ReportBuilder rb(max_violations);
    std::vector<Vector> e;
    for (std::size_t i = 0; i < n; ++i)
        e.push_back(unit_vector(n, i));
    auto br = [&](const Vector &x, const Vector &y) { return a.bracket2(x, y); };
    auto tr = [&](const Vector &x, const Vector &y, const Vector &z) { return a.bracket3(x, y, z); };
    const Vector zero(n);

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (!rb.expect_equal("LY1", {x, y}, br(e[x], e[y]), -br(e[y], e[x])))
                return std::move(rb).finish();

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (!rb.expect_equal("LY2", {x, y, z}, tr(e[x], e[y], e[z]), -tr(e[y], e[x], e[z])))
                    return std::move(rb).finish();
                Vector s = br(br(e[x], e[y]), e[z]) + br(br(e[y], e[z]), e[x]) +
                           br(br(e[z], e[x]), e[y]) + tr(e[x], e[y], e[z]) + tr(e[y], e[z], e[x]) +
                           tr(e[z], e[x], e[y]);
                if (!rb.expect_equal("LY3", {x, y, z}, s, zero))
                    return std::move(rb).finish();
            }

    // LY4 over (x, y, z, a); LY5 over (a, b, x, y).
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) {
                    Vector ly4 = tr(br(e[p], e[q]), e[r], e[s]) + tr(br(e[r], e[p]), e[q], e[s]) +
                                 tr(br(e[q], e[r]), e[p], e[s]);
                    if (!rb.expect_equal("LY4", {p, q, r, s}, ly4, zero))
                        return std::move(rb).finish();
                    Vector lhs = tr(e[p], e[q], br(e[r], e[s]));
                    Vector rhs = br(tr(e[p], e[q], e[r]), e[s]) + br(e[r], tr(e[p], e[q], e[s]));
                    if (!rb.expect_equal("LY5", {p, q, r, s}, lhs, rhs))
                        return std::move(rb).finish();
                }

    // LY6 over (a, b, x, y, z).
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (p == q)
                continue; // both sides vanish by LY2
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y)
                    for (std::size_t z = 0; z < n; ++z) {
                        Vector lhs = tr(e[p], e[q], tr(e[x], e[y], e[z]));
                        Vector rhs = tr(tr(e[p], e[q], e[x]), e[y], e[z]) +
                                     tr(e[x], tr(e[p], e[q], e[y]), e[z]) +
                                     tr(e[x], e[y], tr(e[p], e[q], e[z]));
                        if (!rb.expect_equal("LY6", {p, q, x, y, z}, lhs, rhs))
                            return std::move(rb).finish();
                    }
        }
    return std::move(rb).finish();
}

AxiomReport check_modified_rb(const LYAlgebra &a, const LinearOperator &r, std::size_t max_violations)
{
    const std::size_t n = a.dim();
    check_square(r, n, "check_modified_rb");
    ReportBuilder rb(max_violations);
    std::vector<Vector> e, re;
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back(unit_vector(n, i));
        re.push_back(r.column(i));
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Vector lhs = a.bracket2(re[x], re[y]);
            Vector rhs = r.apply(a.bracket2(re[x], e[y]) + a.bracket2(e[x], re[y])) -
                         a.bracket2(e[x], e[y]);
            if (!rb.expect_equal("MRB-binary", {x, y}, lhs, rhs))
                return std::move(rb).finish();
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vector lhs = a.bracket3(re[x], re[y], re[z]);
                Vector inner = a.bracket3(e[x], re[y], re[z]) + a.bracket3(re[x], e[y], re[z]) +
                               a.bracket3(re[x], re[y], e[z]) + a.bracket3(e[x], e[y], e[z]);
                Vector rhs = r.apply(inner) - a.bracket3(re[x], e[y], e[z]) -
                             a.bracket3(e[x], re[y], e[z]) - a.bracket3(e[x], e[y], re[z]);
                if (!rb.expect_equal("MRB-ternary", {x, y, z}, lhs, rhs))
                    return std::move(rb).finish();
            }
    return std::move(rb).finish();
}

AxiomReport check_rb_weight_m1(const LYAlgebra &a, const LinearOperator &t, std::size_t max_violations)
{
    const std::size_t n = a.dim();
    check_square(t, n, "check_rb_weight_m1");
    ReportBuilder rb(max_violations);
    std::vector<Vector> e, te;
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back(unit_vector(n, i));
        te.push_back(t.column(i));
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Vector lhs = a.bracket2(te[x], te[y]);
            Vector rhs = t.apply(a.bracket2(te[x], e[y]) + a.bracket2(e[x], te[y]) -
                                 a.bracket2(e[x], e[y]));
            if (!rb.expect_equal("RB-binary", {x, y}, lhs, rhs))
                return std::move(rb).finish();
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vector lhs = a.bracket3(te[x], te[y], te[z]);
                Vector inner = a.bracket3(e[x], te[y], te[z]) + a.bracket3(te[x], e[y], te[z]) +
                               a.bracket3(te[x], te[y], e[z]) - a.bracket3(e[x], e[y], te[z]) -
                               a.bracket3(te[x], e[y], e[z]) - a.bracket3(e[x], te[y], e[z]) +
                               a.bracket3(e[x], e[y], e[z]);
                if (!rb.expect_equal("RB-ternary", {x, y, z}, lhs, t.apply(inner)))
                    return std::move(rb).finish();
            }
    return std::move(rb).finish();
}

AxiomReport check_nijenhuis(const LYAlgebra &a, const LinearOperator &nop, std::size_t max_violations)
{
    const std::size_t n = a.dim();
    check_square(nop, n, "check_nijenhuis");
    ReportBuilder rb(max_violations);
    const Matrix n2 = nop * nop;
    const Matrix n3 = n2 * nop;
    std::vector<Vector> e, ne;
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back(unit_vector(n, i));
        ne.push_back(nop.column(i));
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Vector lhs = a.bracket2(ne[x], ne[y]);
            Vector rhs = nop.apply(a.bracket2(ne[x], e[y]) + a.bracket2(e[x], ne[y]) -
                                   nop.apply(a.bracket2(e[x], e[y])));
            if (!rb.expect_equal("Nijenhuis-binary", {x, y}, lhs, rhs))
                return std::move(rb).finish();
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vector lhs = a.bracket3(ne[x], ne[y], ne[z]);
                Vector two = a.bracket3(ne[x], ne[y], e[z]) + a.bracket3(ne[x], e[y], ne[z]) +
                             a.bracket3(e[x], ne[y], ne[z]);
                Vector one = a.bracket3(ne[x], e[y], e[z]) + a.bracket3(e[x], ne[y], e[z]) +
                             a.bracket3(e[x], e[y], ne[z]);
                Vector rhs = nop.apply(two) - n2.apply(one) + n3.apply(a.bracket3(e[x], e[y], e[z]));
                if (!rb.expect_equal("Nijenhuis-ternary", {x, y, z}, lhs, rhs))
                    return std::move(rb).finish();
            }
    return std::move(rb).finish();
}

AxiomReport check_operator(const LYAlgebra &a, const LinearOperator &op, OperatorKind kind,
                           std::size_t max_violations)
{
    switch (kind) {
    case OperatorKind::ModifiedRotaBaxter:
        return check_modified_rb(a, op, max_violations);
    case OperatorKind::RotaBaxterWeightMinusOne:
        return check_rb_weight_m1(a, op, max_violations);
    case OperatorKind::Nijenhuis:
        return check_nijenhuis(a, op, max_violations);
    }
    throw InputError("unknown operator kind");
}

LinearOperator modified_from_rb(const LinearOperator &t)
{
    if (!t.square())
        throw InputError("modified_from_rb: operator must be square");
    return Scalar(2) * t - Matrix::identity(t.rows());
}

LYAlgebra descendant(const LYAlgebra &a, const LinearOperator &r)
{
    AxiomReport rep = check_modified_rb(a, r);
    if (!rep.passed)
        throw CheckFailure("descendant: operator is not a modified Rota-Baxter operator", rep);
    const std::size_t n = a.dim();
    std::vector<Vector> e, re;
    for (std::size_t i = 0; i < n; ++i) {
        e.push_back(unit_vector(n, i));
        re.push_back(r.column(i));
    }
    std::vector<Scalar> c(n * n * n), t(n * n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector b = a.bracket2(re[i], e[j]) + a.bracket2(e[i], re[j]);
            for (std::size_t k = 0; k < n; ++k) {
                c[(i * n + j) * n + k] = b[k];
                Vector v = a.bracket3(e[i], re[j], re[k]) + a.bracket3(re[i], e[j], re[k]) +
                           a.bracket3(re[i], re[j], e[k]) + a.bracket3(e[i], e[j], e[k]);
                for (std::size_t l = 0; l < n; ++l)
                    t[((i * n + j) * n + k) * n + l] = v[l];
            }
        }
    return LYAlgebra::from_tensors(n, std::move(c), std::move(t));
}

LYAlgebra from_lie(std::size_t dim, const std::vector<BinaryEntry> &lie_bracket)
{
    LYAlgebra lie = make_algebra(dim, lie_bracket, {});
    ReportBuilder rb;
    std::vector<Vector> e;
    for (std::size_t i = 0; i < dim; ++i)
        e.push_back(unit_vector(dim, i));
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y)
            for (std::size_t z = 0; z < dim; ++z) {
                Vector jac = lie.bracket2(lie.bracket2(e[x], e[y]), e[z]) +
                             lie.bracket2(lie.bracket2(e[y], e[z]), e[x]) +
                             lie.bracket2(lie.bracket2(e[z], e[x]), e[y]);
                rb.expect_equal("Jacobi", {x, y, z}, jac, Vector(dim));
            }
    AxiomReport rep = std::move(rb).finish();
    if (!rep.passed)
        throw CheckFailure("from_lie: bracket fails the Jacobi identity", rep);

    std::vector<Scalar> t(dim * dim * dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                Vector v = lie.bracket2(lie.bracket2(e[i], e[j]), e[k]);
                for (std::size_t l = 0; l < dim; ++l)
                    t[((i * dim + j) * dim + k) * dim + l] = v[l];
            }
    return LYAlgebra::from_tensors(dim, lie.binary_tensor(), std::move(t));
}

LYAlgebra from_leibniz(std::size_t dim, const std::vector<ProductEntry> &star)
{
    std::vector<Scalar> p(dim * dim * dim);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto &en : star) {
        if (en.i >= dim || en.j >= dim)
            throw InputError("product entry index out of range");
        check_vector_length(en.value, dim, "product entry");
        if (!seen.insert({en.i, en.j}).second)
            throw InputError("duplicate product entry");
        for (std::size_t k = 0; k < dim; ++k)
            p[(en.i * dim + en.j) * dim + k] = en.value[k];
    }
    auto mul = [&](const Vector &x, const Vector &y) {
        Vector out(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero())
                continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (y[j].is_zero())
                    continue;
                Scalar c = x[i] * y[j];
                for (std::size_t k = 0; k < dim; ++k)
                    if (!p[(i * dim + j) * dim + k].is_zero())
                        out[k] += c * p[(i * dim + j) * dim + k];
            }
        }
        return out;
    };
    std::vector<Vector> e;
    for (std::size_t i = 0; i < dim; ++i)
        e.push_back(unit_vector(dim, i));
    ReportBuilder rb;
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y)
            for (std::size_t z = 0; z < dim; ++z) {
                Vector lhs = mul(e[x], mul(e[y], e[z]));
                Vector rhs = mul(mul(e[x], e[y]), e[z]) + mul(e[y], mul(e[x], e[z]));
                rb.expect_equal("Leibniz", {x, y, z}, lhs, rhs);
            }
    AxiomReport rep = std::move(rb).finish();
    if (!rep.passed)
        throw CheckFailure("from_leibniz: product fails the left Leibniz identity", rep);

    std::vector<Scalar> c(dim * dim * dim), t(dim * dim * dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Vector b = mul(e[i], e[j]) - mul(e[j], e[i]);
            Vector ij = mul(e[i], e[j]);
            for (std::size_t k = 0; k < dim; ++k) {
                c[(i * dim + j) * dim + k] = b[k];
                Vector v = -mul(ij, e[k]);
                for (std::size_t l = 0; l < dim; ++l)
                    t[((i * dim + j) * dim + k) * dim + l] = v[l];
            }
        }
    return LYAlgebra::from_tensors(dim, std::move(c), std::move(t));
}

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : InputError("search_operators: enumeration needs " +
                 (required == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                        : std::to_string(required)) +
                 " matrices, budget is " + std::to_string(budget)),
      required_(required)
{
}

std::vector<LinearOperator> search_operators(const LYAlgebra &a, const std::vector<Scalar> &candidates,
                                             OperatorKind kind, const SearchOptions &options)
{
    if (candidates.empty())
        throw InputError("search_operators: candidate set is empty");
    const std::size_t n = a.dim();
    const std::size_t cells = n * n;
    const std::uint64_t base = candidates.size();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        if (count > std::numeric_limits<std::uint64_t>::max() / base) {
            count = std::numeric_limits<std::uint64_t>::max();
            break;
        }
        count *= base;
    }
    if (count > options.budget)
        throw BudgetExceeded(count, options.budget);

    auto matrix_at = [&](std::uint64_t index) {
        Matrix m(n, n);
        for (std::size_t cell = cells; cell-- > 0;) {
            m(cell / n, cell % n) = candidates[index % base];
            index /= base;
        }
        return m;
    };
    auto scan = [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<LinearOperator> found;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            Matrix m = matrix_at(idx);
            if (check_operator(a, m, kind, 1).passed)
                found.push_back(std::move(m));
        }
        return found;
    };

    unsigned threads = std::max(1u, options.threads);
    if (threads == 1 || count < 2 * threads)
        return scan(0, count);

    std::vector<std::vector<LinearOperator>> parts(threads);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (count + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        std::uint64_t begin = std::min<std::uint64_t>(count, w * chunk);
        std::uint64_t end = std::min<std::uint64_t>(count, begin + chunk);
        workers.emplace_back([&, w, begin, end] { parts[w] = scan(begin, end); });
    }
    for (auto &t : workers)
        t.join();
    std::vector<LinearOperator> out;
    for (auto &p : parts)
        for (auto &m : p)
            out.push_back(std::move(m));
    return out;
}

} // namespace lyt
