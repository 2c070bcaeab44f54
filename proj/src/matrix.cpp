#include "lyt/matrix.hpp"

#include "lyt/error.hpp"

namespace lyt
{

Vector zero_vector(std::size_t n)
{
    return Vector(n);
}

Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(std::span<const Scalar> v)
{
    for (const auto &x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vector operator+(const Vector &a, const Vector &b)
{
    if (a.size() != b.size())
        throw InputError("vector length mismatch");
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vector operator-(const Vector &a, const Vector &b)
{
    if (a.size() != b.size())
        throw InputError("vector length mismatch");
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

Vector operator-(const Vector &a)
{
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

Vector operator*(const Scalar &s, const Vector &v)
{
    Vector r(v.size());
    if (s.is_zero())
        return r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            r[i] = s * v[i];
    return r;
}

void axpy(Vector &y, const Scalar &a, std::span<const Scalar> x)
{
    if (y.size() != x.size())
        throw InputError("vector length mismatch");
    if (a.is_zero())
        return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero())
            y[i] += a * x[i];
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_)
            throw InputError("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector> &columns)
{
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        m.set_column(c, columns[c]);
    return m;
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> v)
{
    if (v.size() != rows_ || c >= cols_)
        throw InputError("column shape mismatch");
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const
{
    return lyt::is_zero(a_);
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const
{
    if (v.size() != cols_)
        throw InputError("matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero())
            continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar &x = (*this)(r, c);
            if (!x.is_zero())
                out[r] += x * v[c];
        }
    }
    return out;
}

Matrix &Matrix::operator+=(const Matrix &o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InputError("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero())
            a_[i] += o.a_[i];
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InputError("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero())
            a_[i] -= o.a_[i];
    return *this;
}

Matrix &Matrix::operator*=(const Scalar &s)
{
    for (auto &x : a_)
        if (!x.is_zero())
            x *= s;
    return *this;
}

void Matrix::add_scaled(const Scalar &s, const Matrix &o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InputError("matrix shape mismatch");
    if (s.is_zero())
        return;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero())
            a_[i] += s * o.a_[i];
}

Matrix operator*(const Matrix &a, const Matrix &b)
{
    if (a.cols_ != b.rows_)
        throw InputError("matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar &x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar &y = b(k, j);
                if (!y.is_zero())
                    p(i, j) += x * y;
            }
        }
    return p;
}

Matrix Matrix::operator-() const
{
    Matrix m(*this);
    for (auto &x : m.a_)
        if (!x.is_zero())
            x = -x;
    return m;
}

Matrix vstack(const Matrix &top, const Matrix &bottom)
{
    if (top.cols() != bottom.cols())
        throw InputError("vstack column mismatch");
    Matrix m(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c)
            m(r, c) = top(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < bottom.cols(); ++c)
            m(top.rows() + r, c) = bottom(r, c);
    return m;
}

Matrix hstack(const Matrix &left, const Matrix &right)
{
    if (left.rows() != right.rows())
        throw InputError("hstack row mismatch");
    Matrix m(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c)
            m(r, c) = left(r, c);
        for (std::size_t c = 0; c < right.cols(); ++c)
            m(r, left.cols() + c) = right(r, c);
    }
    return m;
}

Matrix block_diagonal(const Matrix &a, const Matrix &b)
{
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            m(a.rows() + r, a.cols() + c) = b(r, c);
    return m;
}

std::ostream &operator<<(std::ostream &os, const Vector &v)
{
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << v[i];
    return os << ')';
}

std::ostream &operator<<(std::ostream &os, const Matrix &m)
{
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", " : "") << '[';
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? ", " : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

} // namespace lyt
