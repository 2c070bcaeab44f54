#include "lyt/representation.hpp"

#include <string>

namespace lyt
{

namespace
{

void check_shape(const Matrix &m, std::size_t rows, std::size_t cols, const char *what)
{
    if (m.rows() != rows || m.cols() != cols)
        throw InputError(std::string(what) + ": expected " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " matrix, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
}

// Compares two operators on V column by column; each differing column is one
// violation with the basis index of V appended to the tuple.
bool expect_op(ReportBuilder &rb, const char *tag, std::vector<std::size_t> idx, const Matrix &lhs,
               const Matrix &rhs)
{
    if (lhs == rhs)
        return true;
    for (std::size_t u = 0; u < lhs.cols(); ++u) {
        Vector l = lhs.column(u), r = rhs.column(u);
        if (l == r)
            continue;
        auto tuple = idx;
        tuple.push_back(u);
        rb.add(Violation{tag, std::move(tuple), std::move(l), std::move(r)});
        if (rb.full())
            return false;
    }
    return true;
}

Matrix combine(const std::vector<Matrix> &ms, std::size_t m, std::span<const Scalar> coeffs)
{
    Matrix out(m, m);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero())
            out.add_scaled(coeffs[i], ms[i]);
    return out;
}

Matrix combine2(const std::vector<Matrix> &ms, std::size_t n, std::size_t m,
                std::span<const Scalar> x, std::span<const Scalar> y)
{
    Matrix out(m, m);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!y[j].is_zero())
                out.add_scaled(x[i] * y[j], ms[i * n + j]);
    }
    return out;
}

std::vector<Vector> basis(std::size_t n)
{
    std::vector<Vector> e;
    for (std::size_t i = 0; i < n; ++i)
        e.push_back(unit_vector(n, i));
    return e;
}

} // namespace

Representation::Representation(LYAlgebra algebra, std::size_t dim_v, std::vector<Matrix> rho,
                               std::vector<Matrix> theta, std::vector<Matrix> d,
                               std::optional<Matrix> rv)
    : algebra_(std::move(algebra)), dim_v_(dim_v), rho_(std::move(rho)), theta_(std::move(theta)),
      d_(std::move(d)), rv_(std::move(rv))
{
    const std::size_t n = algebra_.dim();
    if (rho_.size() != n)
        throw InputError("representation: expected " + std::to_string(n) + " rho matrices");
    if (theta_.size() != n * n || d_.size() != n * n)
        throw InputError("representation: expected " + std::to_string(n * n) +
                         " theta and D matrices");
    for (const auto &m : rho_)
        check_shape(m, dim_v_, dim_v_, "rho");
    for (const auto &m : theta_)
        check_shape(m, dim_v_, dim_v_, "theta");
    for (const auto &m : d_)
        check_shape(m, dim_v_, dim_v_, "D");
    if (rv_)
        check_shape(*rv_, dim_v_, dim_v_, "R_V");
}

const Matrix &Representation::require_rv() const
{
    if (!rv_)
        throw InputError("representation has no operator R_V");
    return *rv_;
}

Matrix Representation::rho_of(std::span<const Scalar> x) const
{
    if (x.size() != dim())
        throw InputError("rho: dimension mismatch");
    return combine(rho_, dim_v_, x);
}

Matrix Representation::theta_of(std::span<const Scalar> x, std::span<const Scalar> y) const
{
    if (x.size() != dim() || y.size() != dim())
        throw InputError("theta: dimension mismatch");
    return combine2(theta_, dim(), dim_v_, x, y);
}

Matrix Representation::d_of(std::span<const Scalar> x, std::span<const Scalar> y) const
{
    if (x.size() != dim() || y.size() != dim())
        throw InputError("D: dimension mismatch");
    return combine2(d_, dim(), dim_v_, x, y);
}

Representation Representation::with_rv(std::optional<Matrix> rv) const
{
    return Representation(algebra_, dim_v_, rho_, theta_, d_, std::move(rv));
}

Representation make_representation(const LYAlgebra &a, std::size_t dim_v, std::vector<Matrix> rho,
                                   std::vector<Matrix> theta, std::optional<std::vector<Matrix>> d,
                                   std::optional<Matrix> rv)
{
    const std::size_t n = a.dim();
    if (d)
        return Representation(a, dim_v, std::move(rho), std::move(theta), std::move(*d), std::move(rv));
    if (rho.size() != n || theta.size() != n * n)
        throw InputError("make_representation: wrong number of rho/theta matrices");
    for (const auto &m : rho)
        check_shape(m, dim_v, dim_v, "rho");
    for (const auto &m : theta)
        check_shape(m, dim_v, dim_v, "theta");
    auto e = basis(n);
    std::vector<Matrix> solved;
    solved.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix dij = theta[j * n + i] - theta[i * n + j] -
                         combine(rho, dim_v, a.bracket2(e[i], e[j])) + rho[i] * rho[j] -
                         rho[j] * rho[i];
            solved.push_back(std::move(dij));
        }
    return Representation(a, dim_v, std::move(rho), std::move(theta), std::move(solved),
                          std::move(rv));
}

Representation zero_representation(const LYAlgebra &a, std::size_t dim_v, std::optional<Matrix> rv)
{
    const std::size_t n = a.dim();
    return Representation(a, dim_v, std::vector<Matrix>(n, Matrix(dim_v, dim_v)),
                          std::vector<Matrix>(n * n, Matrix(dim_v, dim_v)),
                          std::vector<Matrix>(n * n, Matrix(dim_v, dim_v)), std::move(rv));
}

AxiomReport check_representation(const Representation &rep, std::size_t max_violations)
{
    const LYAlgebra &a = rep.algebra();
    const std::size_t n = a.dim(), m = rep.dim_v();
    ReportBuilder rb(max_violations);
    auto e = basis(n);
    const Matrix zero(m, m);
    auto rho = [&](const Vector &x) { return rep.rho_of(x); };
    auto th = [&](const Vector &x, const Vector &y) { return rep.theta_of(x, y); };
    auto dd = [&](const Vector &x, const Vector &y) { return rep.d_of(x, y); };
    auto br = [&](const Vector &x, const Vector &y) { return a.bracket2(x, y); };
    auto tr = [&](const Vector &x, const Vector &y, const Vector &z) { return a.bracket3(x, y, z); };
#define LYT_EXPECT(tag, idx, lhs, rhs)                                                             \
    if (!expect_op(rb, tag, idx, lhs, rhs))                                                        \
        return std::move(rb).finish();

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Matrix r1 = rep.d(x, y) - rep.theta(y, x) + rep.theta(x, y) + rho(br(e[x], e[y])) -
                        rep.rho(x) * rep.rho(y) + rep.rho(y) * rep.rho(x);
            LYT_EXPECT("R1", (std::vector<std::size_t>{x, y}), r1, zero);
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Matrix r2 = dd(br(e[x], e[y]), e[z]) + dd(br(e[y], e[z]), e[x]) +
                            dd(br(e[z], e[x]), e[y]);
                LYT_EXPECT("R2", (std::vector<std::size_t>{x, y, z}), r2, zero);
                // R3 with (x, y, a) = (x, y, z)
                LYT_EXPECT("R3", (std::vector<std::size_t>{x, y, z}), th(br(e[x], e[y]), e[z]),
                           rep.theta(x, z) * rep.rho(y) - rep.theta(y, z) * rep.rho(x));
                // R4 with (a, b, x) = (x, y, z)
                LYT_EXPECT("R4", (std::vector<std::size_t>{x, y, z}), rep.d(x, y) * rep.rho(z),
                           rep.rho(z) * rep.d(x, y) + rho(tr(e[x], e[y], e[z])));
                // R5 with (x, a, b) = (x, y, z)
                LYT_EXPECT("R5", (std::vector<std::size_t>{x, y, z}), th(e[x], br(e[y], e[z])),
                           rep.rho(y) * rep.theta(x, z) - rep.rho(z) * rep.theta(x, y));
            }
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    // R6 with (a, b, x, y) = (p, q, x, y)
                    LYT_EXPECT("R6", (std::vector<std::size_t>{p, q, x, y}),
                               rep.d(p, q) * rep.theta(x, y),
                               rep.theta(x, y) * rep.d(p, q) + th(tr(e[p], e[q], e[x]), e[y]) +
                                   th(e[x], tr(e[p], e[q], e[y])));
                    // R6'
                    LYT_EXPECT("R6'", (std::vector<std::size_t>{p, q, x, y}),
                               rep.d(p, q) * rep.d(x, y),
                               rep.d(x, y) * rep.d(p, q) + dd(tr(e[p], e[q], e[x]), e[y]) +
                                   dd(e[x], tr(e[p], e[q], e[y])));
                    // R7 with (a, x, y, z) = (p, q, x, y)
                    LYT_EXPECT("R7", (std::vector<std::size_t>{p, q, x, y}),
                               th(e[p], tr(e[q], e[x], e[y])),
                               rep.theta(x, y) * rep.theta(p, q) - rep.theta(q, y) * rep.theta(p, x) +
                                   rep.d(q, x) * rep.theta(p, y));
                }
#undef LYT_EXPECT
    return std::move(rb).finish();
}

AxiomReport check_mrb_representation(const Representation &rep, const LinearOperator &r,
                                     std::size_t max_violations)
{
    const std::size_t n = rep.dim();
    check_shape(r, n, n, "R");
    const Matrix &rv = rep.require_rv();
    ReportBuilder rb(max_violations);
    auto e = basis(n);
    std::vector<Vector> re;
    for (std::size_t i = 0; i < n; ++i)
        re.push_back(r.column(i));

    for (std::size_t x = 0; x < n; ++x) {
        Matrix rho_rx = rep.rho_of(re[x]);
        Matrix lhs = rho_rx * rv;
        Matrix rhs = rv * (rho_rx + rep.rho(x) * rv) - rep.rho(x);
        if (!expect_op(rb, "MRB-rho", {x}, lhs, rhs))
            return std::move(rb).finish();
    }
    auto pair_identity = [&](const char *tag, auto op) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                Matrix rr = op(re[x], re[y]), r1 = op(re[x], e[y]), r2 = op(e[x], re[y]),
                       plain = op(e[x], e[y]);
                Matrix lhs = rr * rv;
                Matrix rhs = rv * (rr + r1 * rv + r2 * rv + plain) - r1 - plain * rv - r2;
                if (!expect_op(rb, tag, {x, y}, lhs, rhs))
                    return false;
            }
        return true;
    };
    if (!pair_identity("MRB-theta", [&](const Vector &x, const Vector &y) { return rep.theta_of(x, y); }))
        return std::move(rb).finish();
    pair_identity("MRB-D", [&](const Vector &x, const Vector &y) { return rep.d_of(x, y); });
    return std::move(rb).finish();
}

AxiomReport check_rb_m1_representation(const Representation &rep, const LinearOperator &t,
                                       std::size_t max_violations)
{
    const std::size_t n = rep.dim();
    check_shape(t, n, n, "T");
    const Matrix &tv = rep.require_rv();
    ReportBuilder rb(max_violations);
    auto e = basis(n);
    std::vector<Vector> te;
    for (std::size_t i = 0; i < n; ++i)
        te.push_back(t.column(i));

    for (std::size_t x = 0; x < n; ++x) {
        Matrix rho_tx = rep.rho_of(te[x]);
        Matrix lhs = rho_tx * tv;
        Matrix rhs = tv * (rho_tx + rep.rho(x) * tv - rep.rho(x));
        if (!expect_op(rb, "RB-rho", {x}, lhs, rhs))
            return std::move(rb).finish();
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Matrix tt = rep.theta_of(te[x], te[y]), t1 = rep.theta_of(te[x], e[y]),
                   t2 = rep.theta_of(e[x], te[y]);
            const Matrix &plain = rep.theta(x, y);
            Matrix lhs = tt * tv;
            Matrix rhs = tv * (tt + t1 * tv + t2 * tv - t1 - t2 - plain * tv + plain);
            if (!expect_op(rb, "RB-theta", {x, y}, lhs, rhs))
                return std::move(rb).finish();
        }
    return std::move(rb).finish();
}

AxiomReport validate_mrb_representation(const Representation &rep, const LinearOperator &r,
                                        std::size_t max_violations)
{
    AxiomReport out = check_modified_rb(rep.algebra(), r, max_violations);
    out.merge(check_representation(rep, max_violations), max_violations);
    out.merge(check_mrb_representation(rep, r, max_violations), max_violations);
    return out;
}

Representation adjoint_representation(const LYAlgebra &a)
{
    AxiomReport rep = check_ly_axioms(a);
    if (!rep.passed)
        throw CheckFailure("adjoint_representation: algebra fails LY1-LY6", rep);
    const std::size_t n = a.dim();
    auto e = basis(n);
    std::vector<Matrix> rho, theta, d;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix ad(n, n);
        for (std::size_t z = 0; z < n; ++z)
            ad.set_column(z, a.bracket2(e[i], e[z]));
        rho.push_back(std::move(ad));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix right(n, n), left(n, n);
            for (std::size_t z = 0; z < n; ++z) {
                right.set_column(z, a.bracket3(e[z], e[i], e[j]));
                left.set_column(z, a.bracket3(e[i], e[j], e[z]));
            }
            theta.push_back(std::move(right));
            d.push_back(std::move(left));
        }
    return Representation(a, n, std::move(rho), std::move(theta), std::move(d), std::nullopt);
}

Representation adjoint_mrb_representation(const LYAlgebra &a, const LinearOperator &r)
{
    AxiomReport rep = check_modified_rb(a, r);
    if (!rep.passed)
        throw CheckFailure("adjoint_mrb_representation: operator is not modified Rota-Baxter", rep);
    return adjoint_representation(a).with_rv(r);
}

Representation induced_representation(const Representation &rep, const LinearOperator &r)
{
    AxiomReport check = validate_mrb_representation(rep, r);
    if (!check.passed)
        throw CheckFailure("induced_representation: not a modified Rota-Baxter representation", check);
    const LYAlgebra &a = rep.algebra();
    const std::size_t n = a.dim();
    const Matrix &rv = *rep.rv();
    auto e = basis(n);
    std::vector<Vector> re;
    for (std::size_t i = 0; i < n; ++i)
        re.push_back(r.column(i));

    std::vector<Matrix> rho, theta, d;
    for (std::size_t x = 0; x < n; ++x)
        rho.push_back(rep.rho_of(re[x]) - rv * rep.rho(x));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            theta.push_back(rep.theta_of(re[x], re[y]) -
                            rv * (rep.theta_of(re[x], e[y]) + rep.theta_of(e[x], re[y])) +
                            rep.theta(x, y));
            d.push_back(rep.d_of(re[x], re[y]) - rv * (rep.d_of(re[x], e[y]) + rep.d_of(e[x], re[y])) +
                        rep.d(x, y));
        }
    return Representation(descendant(a, r), rep.dim_v(), std::move(rho), std::move(theta),
                          std::move(d), rv);
}

Representation transport_rb_representation(const Representation &rep)
{
    return rep.with_rv(modified_from_rb(rep.require_rv()));
}

MRBLYAlgebra semidirect_product(const LYAlgebra &a, const LinearOperator &r, const Representation &rep)
{
    if (!(rep.algebra() == a))
        throw InputError("semidirect_product: representation belongs to a different algebra");
    AxiomReport check = validate_mrb_representation(rep, r);
    if (!check.passed)
        throw CheckFailure("semidirect_product: not a modified Rota-Baxter representation", check);

    const std::size_t n = a.dim(), m = rep.dim_v(), total = n + m;
    std::vector<Scalar> c(total * total * total), t(total * total * total * total);
    auto cb = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar & {
        return c[(i * total + j) * total + k];
    };
    auto tb = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> Scalar & {
        return t[((i * total + j) * total + k) * total + l];
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                cb(i, j, k) = a.binary(i, j, k);
                for (std::size_t l = 0; l < n; ++l)
                    tb(i, j, k, l) = a.ternary(i, j, k, l);
            }
            for (std::size_t u = 0; u < m; ++u)
                for (std::size_t w = 0; w < m; ++w) {
                    tb(i, j, n + u, n + w) = rep.d(i, j)(w, u);
                    tb(i, n + u, j, n + w) = -rep.theta(i, j)(w, u);
                    tb(n + u, i, j, n + w) = rep.theta(i, j)(w, u);
                }
        }
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t w = 0; w < m; ++w) {
                cb(i, n + u, n + w) = rep.rho(i)(w, u);
                cb(n + u, i, n + w) = -rep.rho(i)(w, u);
            }
    }
    return MRBLYAlgebra{LYAlgebra::from_tensors(total, std::move(c), std::move(t)),
                        block_diagonal(r, *rep.rv())};
}

} // namespace lyt
