#include "doctest.h"
#include "support.hpp"

using namespace lyt;

TEST_CASE("scalars stay canonical")
{
    Scalar a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK(a.denominator() > 0);
    CHECK((a + Scalar(3, 2)).is_zero());
    CHECK((Scalar(1, 3) * Scalar(3)).is_integer());
    CHECK(Scalar(2, 4) == Scalar(1, 2));
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), InputError);
}

TEST_CASE("scalar parsing")
{
    CHECK(Scalar::parse("7") == Scalar(7));
    CHECK(Scalar::parse("-3/5") == Scalar(-3, 5));
    CHECK_THROWS_AS(Scalar::parse("2/4"), InputError);
    CHECK(Scalar::parse("2/4", false) == Scalar(1, 2));
    CHECK_THROWS_AS(Scalar::parse("1/0"), InputError);
    CHECK_THROWS_AS(Scalar::parse("1/-2"), InputError);
    CHECK_THROWS_AS(Scalar::parse("1.5"), InputError);
    CHECK_THROWS_AS(Scalar::parse(""), InputError);
}

TEST_CASE("big integers survive arithmetic")
{
    Scalar big = Scalar::parse("123456789012345678901234567890");
    CHECK((big * big / big) == big);
    CHECK_FALSE(big.as_int64().has_value());
    CHECK(Scalar(-5).as_int64() == -5);
}

TEST_CASE("matrix conventions are column-vector")
{
    Matrix m{{1, 2}, {3, 4}};
    CHECK(m.apply(test::vec({1, 0})) == test::vec({1, 3}));
    CHECK(m.column(1) == test::vec({2, 4}));
    CHECK((m * Matrix::identity(2)) == m);
    CHECK(m.transpose()(0, 1) == Scalar(3));
}

TEST_CASE("rank agrees between strategies on random matrices")
{
    std::mt19937_64 rng(test::seed());
    for (int t = 0; t < 60; ++t) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        Matrix m = test::random_matrix(r, c, rng);
        if (t % 3 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j)
                m(r - 1, j) = m(0, j) * Scalar(2) - m(1 % r, j);
        const std::size_t a = rank(m, RankStrategy::FractionFree);
        CHECK(a == rank(m, RankStrategy::RationalEchelon));
        const auto k = kernel_basis(m);
        CHECK(k.size() + a == c);
        for (const auto &v : k)
            CHECK(is_zero(m.apply(v)));
    }
}

TEST_CASE("solve finds exact solutions or reports inconsistency")
{
    Matrix m{{1, 1}, {2, 2}};
    auto x = solve(m, test::vec({1, 2}));
    REQUIRE(x);
    CHECK(m.apply(*x) == test::vec({1, 2}));
    CHECK_FALSE(solve(m, test::vec({1, 3})));
    CHECK(in_column_span(m, test::vec({3, 6})));
    CHECK_FALSE(in_column_span(m, test::vec({0, 1})));
}

TEST_CASE("empty shapes")
{
    Matrix m(0, 3);
    CHECK(rank(m) == 0);
    CHECK(kernel_basis(m).size() == 3);
    CHECK(rank(Matrix(3, 0)) == 0);
}
