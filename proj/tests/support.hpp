#pragma once

#include <cstdlib>
#include <random>
#include <string>

#include "lyt/deformation.hpp"

namespace lyt::test
{

// LYT_SEED overrides the default so failing runs can be replayed.
inline std::uint64_t seed(std::uint64_t fallback = 20240601)
{
    if (const char *s = std::getenv("LYT_SEED"); s && *s)
        return std::strtoull(s, nullptr, 10);
    return fallback;
}

inline Vector random_vector(std::size_t n, std::mt19937_64 &rng)
{
    Vector v(n);
    for (auto &s : v)
        s = random_small_scalar(rng);
    return v;
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64 &rng)
{
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = random_small_scalar(rng);
    return m;
}

inline Vector vec(std::initializer_list<Scalar> xs) { return Vector(xs); }

inline bool has_tag(const AxiomReport &r, const std::string &tag)
{
    for (const auto &v : r.violations)
        if (v.axiom == tag)
            return true;
    return false;
}

} // namespace lyt::test
