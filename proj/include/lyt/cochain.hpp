#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "lyt/matrix.hpp"

namespace lyt
{

/// Bumped whenever the flattening order below changes.
inline constexpr const char *kBasisOrderTag = "lyt-basis-v1";

/// Wedge pairs (i < j) of an n-dim space, numbered lexicographically.
std::size_t wedge_count(std::size_t n);
std::size_t wedge_index(std::size_t i, std::size_t j, std::size_t n);
std::pair<std::size_t, std::size_t> wedge_pair(std::size_t w, std::size_t n);

/// Coefficient of e_i ^ e_j (i < j) in x ^ y.
inline Scalar wedge_coeff(std::span<const Scalar> x, std::span<const Scalar> y, std::size_t i,
                          std::size_t j)
{
    return x[i] * y[j] - x[j] * y[i];
}

/// A linear map L -> V as an m x n matrix; flat index t*n + s.
struct Cochain1
{
    Matrix h;

    static Cochain1 zero(std::size_t n, std::size_t m) { return {Matrix(m, n)}; }
    std::size_t dim() const { return h.cols(); }
    std::size_t dim_v() const { return h.rows(); }

    Vector flatten() const;
    static Cochain1 unflatten(std::size_t n, std::size_t m, std::span<const Scalar> flat);

    friend bool operator==(const Cochain1 &, const Cochain1 &) = default;
};

/// (f, g) with f : L^L -> V and g : L^L (x) L -> V. Only canonical wedge
/// pairs are stored; the accessors return the signed value for any pair.
///
/// Flat layout: f at w*m + a, then g at W*m + (w*n + k)*m + a.
class Cochain2
{
public:
    Cochain2() = default;
    Cochain2(std::size_t n, std::size_t m);

    std::size_t dim() const { return n_; }
    std::size_t dim_v() const { return m_; }
    static std::size_t size(std::size_t n, std::size_t m);

    Vector f(std::size_t i, std::size_t j) const;
    Vector g(std::size_t i, std::size_t j, std::size_t k) const;
    /// Stores the value at (i, j) given in that order; (j, i) then reads -value.
    void set_f(std::size_t i, std::size_t j, const Vector &v);
    void set_g(std::size_t i, std::size_t j, std::size_t k, const Vector &v);

    Vector eval_f(std::span<const Scalar> x, std::span<const Scalar> y) const;
    Vector eval_g(std::span<const Scalar> x, std::span<const Scalar> y, std::span<const Scalar> z) const;

    const Vector &flatten() const { return data_; }
    static Cochain2 unflatten(std::size_t n, std::size_t m, std::span<const Scalar> flat);
    bool is_zero() const;

    Cochain2 &operator+=(const Cochain2 &o);
    Cochain2 &operator-=(const Cochain2 &o);
    friend Cochain2 operator+(Cochain2 a, const Cochain2 &b) { return a += b; }
    friend Cochain2 operator-(Cochain2 a, const Cochain2 &b) { return a -= b; }
    friend bool operator==(const Cochain2 &, const Cochain2 &) = default;

private:
    std::size_t f_offset(std::size_t w) const { return w * m_; }
    std::size_t g_offset(std::size_t w, std::size_t k) const
    {
        return wedge_count(n_) * m_ + (w * n_ + k) * m_;
    }

    std::size_t n_ = 0, m_ = 0;
    Vector data_;
};

/// (f, g) with f : (L^L) (x) (L^L) -> V and g : (L^L) (x) (L^L) (x) L -> V.
/// Flat layout: f at (w1*W + w2)*m + a, then g at
/// W*W*m + ((w1*W + w2)*n + k)*m + a.
class Cochain3
{
public:
    Cochain3() = default;
    Cochain3(std::size_t n, std::size_t m);

    std::size_t dim() const { return n_; }
    std::size_t dim_v() const { return m_; }
    static std::size_t size(std::size_t n, std::size_t m);

    Vector f(std::size_t a, std::size_t b, std::size_t x, std::size_t y) const;
    Vector g(std::size_t a, std::size_t b, std::size_t x, std::size_t y, std::size_t z) const;
    void set_f(std::size_t a, std::size_t b, std::size_t x, std::size_t y, const Vector &v);
    void set_g(std::size_t a, std::size_t b, std::size_t x, std::size_t y, std::size_t z,
               const Vector &v);

    const Vector &flatten() const { return data_; }
    static Cochain3 unflatten(std::size_t n, std::size_t m, std::span<const Scalar> flat);
    bool is_zero() const;

    friend bool operator==(const Cochain3 &, const Cochain3 &) = default;

private:
    std::size_t f_offset(std::size_t w1, std::size_t w2) const
    {
        return (w1 * wedge_count(n_) + w2) * m_;
    }
    std::size_t g_offset(std::size_t w1, std::size_t w2, std::size_t k) const
    {
        const std::size_t w = wedge_count(n_);
        return w * w * m_ + ((w1 * w + w2) * n_ + k) * m_;
    }

    std::size_t n_ = 0, m_ = 0;
    Vector data_;
};

/// Degree-2 cochain of the total complex: (ly, op) in C^2_LY + C^1_MRBO.
struct TotalCochain2
{
    Cochain2 ly;
    Cochain1 op;

    static TotalCochain2 zero(std::size_t n, std::size_t m)
    {
        return {Cochain2(n, m), Cochain1::zero(n, m)};
    }
    static std::size_t size(std::size_t n, std::size_t m) { return Cochain2::size(n, m) + n * m; }
    Vector flatten() const;
    static TotalCochain2 unflatten(std::size_t n, std::size_t m, std::span<const Scalar> flat);
    bool is_zero() const { return ly.is_zero() && op.h.is_zero(); }

    friend TotalCochain2 operator+(const TotalCochain2 &a, const TotalCochain2 &b)
    {
        return {a.ly + b.ly, {a.op.h + b.op.h}};
    }
    friend TotalCochain2 operator-(const TotalCochain2 &a, const TotalCochain2 &b)
    {
        return {a.ly - b.ly, {a.op.h - b.op.h}};
    }
    friend bool operator==(const TotalCochain2 &, const TotalCochain2 &) = default;
};

/// Degree-3 value of the total differential: (ly, op) in C^3_LY + C^2_MRBO.
struct TotalCochain3
{
    Cochain3 ly;
    Cochain2 op;

    Vector flatten() const;
    bool is_zero() const { return ly.is_zero() && op.is_zero(); }
    friend bool operator==(const TotalCochain3 &, const TotalCochain3 &) = default;
};

} // namespace lyt
