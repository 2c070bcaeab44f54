#include "lyt/linalg.hpp"

#include "lyt/error.hpp"

namespace lyt
{

std::string_view to_string(RankStrategy s)
{
    switch (s) {
    case RankStrategy::FractionFree:
        return "fraction-free";
    case RankStrategy::RationalEchelon:
        return "rational-echelon";
    }
    return "?";
}

Echelon row_reduce(Matrix m)
{
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        Scalar inv = Scalar(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero())
                m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero())
                    m(i, j) -= f * m(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(m);
    return e;
}

namespace
{

// Bareiss elimination. Each row is first scaled by the lcm of its
// denominators so the working matrix is integral; row scaling preserves rank.
std::size_t bareiss_rank(const Matrix &m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<mpz_class> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < cols; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) {
            const mpq_class &q = m(r, c).raw();
            a[r * cols + c] = q.get_num() * (l / q.get_den());
        }
    }
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class & { return a[r * cols + c]; };

    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && at(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != rank)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(at(p, j), at(rank, j));
        const mpz_class pivot = at(rank, c);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const mpz_class lead = at(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = pivot * at(i, j) - lead * at(rank, j);
                mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, c) = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

} // namespace

std::size_t rank(const Matrix &m, RankStrategy strategy)
{
    if (strategy == RankStrategy::FractionFree)
        return bareiss_rank(m);
    return row_reduce(m).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix &m)
{
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix &m, const Vector &b)
{
    if (b.size() != m.rows())
        throw InputError("solve: right-hand side length mismatch");
    Echelon e = row_reduce(hstack(m, Matrix::from_columns(m.rows(), {b})));
    if (!e.pivots.empty() && e.pivots.back() == m.cols())
        return std::nullopt;
    Vector x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

bool in_column_span(const Matrix &m, const Vector &v)
{
    if (v.size() != m.rows())
        throw InputError("in_column_span: length mismatch");
    Matrix aug = hstack(m, Matrix::from_columns(m.rows(), {v}));
    return rank(aug, RankStrategy::FractionFree) == rank(m, RankStrategy::FractionFree);
}

} // namespace lyt
