#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "lyt/scalar.hpp"

namespace lyt
{

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);

Vector operator+(const Vector &a, const Vector &b);
Vector operator-(const Vector &a, const Vector &b);
Vector operator-(const Vector &a);
Vector operator*(const Scalar &s, const Vector &v);
/// y += a * x
void axpy(Vector &y, const Scalar &a, std::span<const Scalar> x);

/// Dense row-major rational matrix. Acts on column vectors: (Mv)_r = sum_c M[r][c] v[c].
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix from_columns(std::size_t rows, const std::vector<Vector> &columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar &operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar &operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Scalar> v);

    const std::vector<Scalar> &data() const { return a_; }

    bool is_zero() const;
    Matrix transpose() const;
    Vector apply(std::span<const Scalar> v) const;

    Matrix &operator+=(const Matrix &o);
    Matrix &operator-=(const Matrix &o);
    Matrix &operator*=(const Scalar &s);
    /// this += s * o
    void add_scaled(const Scalar &s, const Matrix &o);

    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator*(const Scalar &s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix &a, const Matrix &b);
    Matrix operator-() const;

    friend bool operator==(const Matrix &a, const Matrix &b) = default;

    friend std::ostream &operator<<(std::ostream &os, const Matrix &m);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_;
};

/// Square matrices acting on a single space (R, T, N, R_V, sections...).
using LinearOperator = Matrix;

/// Vertical concatenation; column counts must agree.
Matrix vstack(const Matrix &top, const Matrix &bottom);
/// Horizontal concatenation; row counts must agree.
Matrix hstack(const Matrix &left, const Matrix &right);
/// Block-diagonal [[a, 0], [0, b]].
Matrix block_diagonal(const Matrix &a, const Matrix &b);

std::ostream &operator<<(std::ostream &os, const Vector &v);

} // namespace lyt
