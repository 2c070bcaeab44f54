#include "lyt/scalar.hpp"

#include <limits>

#include "lyt/error.hpp"

namespace lyt
{

Scalar::Scalar(long numerator, long denominator)
{
    if (denominator == 0)
        throw InputError("division by zero in rational literal");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q))
{
    q_.canonicalize();
}

namespace
{

bool parse_integer(std::string_view text, mpz_class &out)
{
    if (text.empty())
        return false;
    std::size_t start = (text[0] == '-') ? 1 : 0;
    if (start == text.size())
        return false;
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            return false;
    return out.set_str(std::string(text), 10) == 0;
}

} // namespace

Scalar Scalar::parse(std::string_view text, bool require_lowest_terms)
{
    auto slash = text.find('/');
    mpz_class num, den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num))
            throw InputError("malformed rational: \"" + std::string(text) + "\"");
    } else {
        auto num_text = text.substr(0, slash);
        auto den_text = text.substr(slash + 1);
        if (!parse_integer(num_text, num) || den_text.empty() || den_text[0] == '-' ||
            !parse_integer(den_text, den))
            throw InputError("malformed rational: \"" + std::string(text) + "\"");
        if (den == 0)
            throw InputError("division by zero in rational literal \"" + std::string(text) + "\"");
        if (require_lowest_terms) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (g != 1)
                throw InputError("rational not in lowest terms: \"" + std::string(text) + "\"");
        }
    }
    mpq_class q(num, den);
    return Scalar(std::move(q));
}

std::optional<std::int64_t> Scalar::as_int64() const
{
    if (!is_integer())
        return std::nullopt;
    const mpz_class &n = q_.get_num();
    if (!n.fits_slong_p())
        return std::nullopt;
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return static_cast<std::int64_t>(n.get_si());
}

Scalar &Scalar::operator/=(const Scalar &o)
{
    if (o.is_zero())
        throw InputError("division by zero");
    q_ /= o.q_;
    return *this;
}

} // namespace lyt
