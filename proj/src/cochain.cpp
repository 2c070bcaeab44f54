#include "lyt/cochain.hpp"

#include <string>

#include "lyt/error.hpp"

namespace lyt
{

namespace
{

Vector slice(const Vector &data, std::size_t offset, std::size_t m, bool negate)
{
    Vector out(data.begin() + static_cast<std::ptrdiff_t>(offset),
               data.begin() + static_cast<std::ptrdiff_t>(offset + m));
    if (negate)
        for (auto &s : out)
            s = -s;
    return out;
}

void store(Vector &data, std::size_t offset, const Vector &v, bool negate)
{
    for (std::size_t a = 0; a < v.size(); ++a)
        data[offset + a] = negate ? -v[a] : v[a];
}

// Canonical wedge index and sign for (i, j); `vanishes` when i == j.
struct Oriented
{
    std::size_t w;
    bool negate;
    bool vanishes;
};

Oriented orient(std::size_t i, std::size_t j, std::size_t n)
{
    if (i >= n || j >= n)
        throw InputError("cochain: basis index out of range");
    if (i == j)
        return {0, false, true};
    if (i < j)
        return {wedge_index(i, j, n), false, false};
    return {wedge_index(j, i, n), true, false};
}

void check_value(const Vector &v, std::size_t m)
{
    if (v.size() != m)
        throw InputError("cochain: value has length " + std::to_string(v.size()) + ", expected " +
                         std::to_string(m));
}

void check_flat(std::span<const Scalar> flat, std::size_t expected, const char *what)
{
    if (flat.size() != expected)
        throw InputError(std::string(what) + ": expected " + std::to_string(expected) +
                         " coordinates, got " + std::to_string(flat.size()));
}

} // namespace

std::size_t wedge_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

std::size_t wedge_index(std::size_t i, std::size_t j, std::size_t n)
{
    // pairs starting below i: sum_{r<i} (n-1-r)
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> wedge_pair(std::size_t w, std::size_t n)
{
    std::size_t i = 0;
    while (w >= n - 1 - i) {
        w -= n - 1 - i;
        ++i;
    }
    return {i, i + 1 + w};
}

Vector Cochain1::flatten() const { return h.data(); }

Cochain1 Cochain1::unflatten(std::size_t n, std::size_t m, std::span<const Scalar> flat)
{
    check_flat(flat, n * m, "Cochain1");
    Matrix h(m, n);
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t s = 0; s < n; ++s)
            h(t, s) = flat[t * n + s];
    return {std::move(h)};
}

Cochain2::Cochain2(std::size_t n, std::size_t m) : n_(n), m_(m), data_(size(n, m)) {}

std::size_t Cochain2::size(std::size_t n, std::size_t m)
{
    return wedge_count(n) * m * (1 + n);
}

Vector Cochain2::f(std::size_t i, std::size_t j) const
{
    auto o = orient(i, j, n_);
    if (o.vanishes)
        return zero_vector(m_);
    return slice(data_, f_offset(o.w), m_, o.negate);
}

Vector Cochain2::g(std::size_t i, std::size_t j, std::size_t k) const
{
    auto o = orient(i, j, n_);
    if (o.vanishes)
        return zero_vector(m_);
    return slice(data_, g_offset(o.w, k), m_, o.negate);
}

void Cochain2::set_f(std::size_t i, std::size_t j, const Vector &v)
{
    check_value(v, m_);
    auto o = orient(i, j, n_);
    if (o.vanishes) {
        if (!lyt::is_zero(v))
            throw InputError("cochain: nonzero value on a repeated wedge index");
        return;
    }
    store(data_, f_offset(o.w), v, o.negate);
}

void Cochain2::set_g(std::size_t i, std::size_t j, std::size_t k, const Vector &v)
{
    check_value(v, m_);
    if (k >= n_)
        throw InputError("cochain: basis index out of range");
    auto o = orient(i, j, n_);
    if (o.vanishes) {
        if (!lyt::is_zero(v))
            throw InputError("cochain: nonzero value on a repeated wedge index");
        return;
    }
    store(data_, g_offset(o.w, k), v, o.negate);
}

Vector Cochain2::eval_f(std::span<const Scalar> x, std::span<const Scalar> y) const
{
    Vector out = zero_vector(m_);
    for (std::size_t w = 0; w < wedge_count(n_); ++w) {
        auto [i, j] = wedge_pair(w, n_);
        Scalar c = wedge_coeff(x, y, i, j);
        if (!c.is_zero())
            axpy(out, c, std::span<const Scalar>(data_).subspan(f_offset(w), m_));
    }
    return out;
}

Vector Cochain2::eval_g(std::span<const Scalar> x, std::span<const Scalar> y,
                        std::span<const Scalar> z) const
{
    Vector out = zero_vector(m_);
    for (std::size_t w = 0; w < wedge_count(n_); ++w) {
        auto [i, j] = wedge_pair(w, n_);
        Scalar c = wedge_coeff(x, y, i, j);
        if (c.is_zero())
            continue;
        for (std::size_t k = 0; k < n_; ++k)
            if (!z[k].is_zero())
                axpy(out, c * z[k], std::span<const Scalar>(data_).subspan(g_offset(w, k), m_));
    }
    return out;
}

Cochain2 Cochain2::unflatten(std::size_t n, std::size_t m, std::span<const Scalar> flat)
{
    check_flat(flat, size(n, m), "Cochain2");
    Cochain2 c(n, m);
    c.data_.assign(flat.begin(), flat.end());
    return c;
}

bool Cochain2::is_zero() const { return lyt::is_zero(data_); }

Cochain2 &Cochain2::operator+=(const Cochain2 &o)
{
    if (n_ != o.n_ || m_ != o.m_)
        throw InputError("cochain: shape mismatch");
    for (std::size_t t = 0; t < data_.size(); ++t)
        data_[t] += o.data_[t];
    return *this;
}

Cochain2 &Cochain2::operator-=(const Cochain2 &o)
{
    if (n_ != o.n_ || m_ != o.m_)
        throw InputError("cochain: shape mismatch");
    for (std::size_t t = 0; t < data_.size(); ++t)
        data_[t] -= o.data_[t];
    return *this;
}

Cochain3::Cochain3(std::size_t n, std::size_t m) : n_(n), m_(m), data_(size(n, m)) {}

std::size_t Cochain3::size(std::size_t n, std::size_t m)
{
    const std::size_t w = wedge_count(n);
    return w * w * m * (1 + n);
}

Vector Cochain3::f(std::size_t a, std::size_t b, std::size_t x, std::size_t y) const
{
    auto o1 = orient(a, b, n_), o2 = orient(x, y, n_);
    if (o1.vanishes || o2.vanishes)
        return zero_vector(m_);
    return slice(data_, f_offset(o1.w, o2.w), m_, o1.negate != o2.negate);
}

Vector Cochain3::g(std::size_t a, std::size_t b, std::size_t x, std::size_t y, std::size_t z) const
{
    auto o1 = orient(a, b, n_), o2 = orient(x, y, n_);
    if (o1.vanishes || o2.vanishes)
        return zero_vector(m_);
    return slice(data_, g_offset(o1.w, o2.w, z), m_, o1.negate != o2.negate);
}

void Cochain3::set_f(std::size_t a, std::size_t b, std::size_t x, std::size_t y, const Vector &v)
{
    check_value(v, m_);
    auto o1 = orient(a, b, n_), o2 = orient(x, y, n_);
    if (o1.vanishes || o2.vanishes) {
        if (!lyt::is_zero(v))
            throw InputError("cochain: nonzero value on a repeated wedge index");
        return;
    }
    store(data_, f_offset(o1.w, o2.w), v, o1.negate != o2.negate);
}

void Cochain3::set_g(std::size_t a, std::size_t b, std::size_t x, std::size_t y, std::size_t z,
                     const Vector &v)
{
    check_value(v, m_);
    if (z >= n_)
        throw InputError("cochain: basis index out of range");
    auto o1 = orient(a, b, n_), o2 = orient(x, y, n_);
    if (o1.vanishes || o2.vanishes) {
        if (!lyt::is_zero(v))
            throw InputError("cochain: nonzero value on a repeated wedge index");
        return;
    }
    store(data_, g_offset(o1.w, o2.w, z), v, o1.negate != o2.negate);
}

Cochain3 Cochain3::unflatten(std::size_t n, std::size_t m, std::span<const Scalar> flat)
{
    check_flat(flat, size(n, m), "Cochain3");
    Cochain3 c(n, m);
    c.data_.assign(flat.begin(), flat.end());
    return c;
}

bool Cochain3::is_zero() const { return lyt::is_zero(data_); }

Vector TotalCochain2::flatten() const
{
    Vector out = ly.flatten();
    const auto &h = op.h.data();
    out.insert(out.end(), h.begin(), h.end());
    return out;
}

TotalCochain2 TotalCochain2::unflatten(std::size_t n, std::size_t m, std::span<const Scalar> flat)
{
    check_flat(flat, size(n, m), "TotalCochain2");
    const std::size_t split = Cochain2::size(n, m);
    return {Cochain2::unflatten(n, m, flat.first(split)),
            Cochain1::unflatten(n, m, flat.subspan(split))};
}

Vector TotalCochain3::flatten() const
{
    Vector out = ly.flatten();
    const auto &o = op.flatten();
    out.insert(out.end(), o.begin(), o.end());
    return out;
}

} // namespace lyt
