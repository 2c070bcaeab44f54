#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lyt
{

/// Exact rational number. Always kept in canonical form: positive denominator,
/// numerator and denominator coprime.
class Scalar
{
public:
    Scalar() = default;

    template <std::integral I>
    Scalar(I value) : q_(static_cast<long>(value))
    {
    }

    Scalar(long numerator, long denominator);
    explicit Scalar(mpq_class q);

    /// Parses "p" or "p/q". Rejects a zero or negative denominator and, when
    /// `require_lowest_terms` is set, any fraction that is not fully reduced.
    static Scalar parse(std::string_view text, bool require_lowest_terms = true);

    std::string str() const { return q_.get_str(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Numerator as int64 when this is an integer that fits, otherwise empty.
    std::optional<std::int64_t> as_int64() const;

    const mpq_class &raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    Scalar &operator+=(const Scalar &o)
    {
        q_ += o.q_;
        return *this;
    }
    Scalar &operator-=(const Scalar &o)
    {
        q_ -= o.q_;
        return *this;
    }
    Scalar &operator*=(const Scalar &o)
    {
        q_ *= o.q_;
        return *this;
    }
    Scalar &operator/=(const Scalar &o);

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
    Scalar operator-() const { return Scalar(mpq_class(-q_)); }

    friend bool operator==(const Scalar &a, const Scalar &b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Scalar &a, const Scalar &b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.str(); }

private:
    mpq_class q_;
};

} // namespace lyt
