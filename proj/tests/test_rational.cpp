#include <doctest.h>

#include <climits>
#include <random>

#include "zkn/errors.hpp"
#include "zkn/rational.hpp"

using zkn::Rational;

namespace {

mpq_class gmp(const Rational& q) { return mpq_class(q.str()); }

Rational random_rational(std::mt19937_64& rng)
{
    // Mix small values with ones near the 64-bit limits to hit promotion.
    static const long long edges[] = {0, 1, -1, 2, 3, 7, LLONG_MAX, LLONG_MAX - 1, LLONG_MIN + 1, 1LL << 62,
                                      -(1LL << 62), 3037000499LL, 4294967296LL};
    auto pick = [&]() -> long long {
        if (rng() % 3 == 0)
            return edges[rng() % std::size(edges)];
        return static_cast<long long>(rng() % 2001) - 1000;
    };
    long long den = pick();
    if (den == 0)
        den = 1;
    return Rational(pick(), den);
}

}  // namespace

TEST_CASE("canonical form")
{
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, -5).str() == "0");
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("+12") == Rational(12));
    CHECK(Rational::parse("10/5").den_str() == "1");
    CHECK_THROWS_AS(Rational::parse("1/0"), zkn::InvalidInput);
    CHECK_THROWS_AS(Rational::parse("1/-2"), zkn::InvalidInput);
    CHECK_THROWS_AS(Rational::parse("x"), zkn::InvalidInput);
    CHECK_THROWS_AS(Rational::parse(""), zkn::InvalidInput);
    CHECK_THROWS(Rational(0).inverse());
}

TEST_CASE("large values promote and demote")
{
    const Rational big(LLONG_MAX);
    const Rational sum = big + big;
    CHECK_FALSE(sum.is_small());
    CHECK(sum.str() == "18446744073709551614");
    const Rational back = sum - big;
    CHECK(back.is_small());
    CHECK(back == big);
    CHECK((sum * Rational(1, 2)).is_small());
    CHECK(Rational::parse("123456789012345678901234567890/123456789012345678901234567890") == Rational(1));
    CHECK(Rational(LLONG_MIN).str() == std::to_string(LLONG_MIN));
    CHECK_FALSE(Rational(LLONG_MIN).is_small());
}

TEST_CASE("from_int128 reduces")
{
    const __int128 two64 = static_cast<__int128>(1) << 64;
    CHECK(Rational::from_int128(6, 4) == Rational(3, 2));
    CHECK(Rational::from_int128(-two64, two64 * 2) == Rational(-1, 2));
    CHECK(Rational::from_int128(two64 + 1, 1).str() == "18446744073709551617");
    CHECK(Rational::from_int128(0, 7).is_zero());
}

TEST_CASE("arithmetic agrees with GMP")
{
    std::mt19937_64 rng(2024);
    for (int n = 0; n < 20000; ++n) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const mpq_class ga = gmp(a), gb = gmp(b);
        REQUIRE(gmp(a + b) == ga + gb);
        REQUIRE(gmp(a - b) == ga - gb);
        REQUIRE(gmp(a * b) == ga * gb);
        REQUIRE(gmp(-a) == -ga);
        REQUIRE((a < b) == (ga < gb));
        REQUIRE((a == b) == (ga == gb));
        if (!b.is_zero())
            REQUIRE(gmp(a / b) == ga / gb);
        // The representation is canonical: equal values compare equal field-wise.
        REQUIRE(Rational(mpq_class(ga + gb)) == a + b);
    }
}

TEST_CASE("field laws on sampled triples")
{
    std::mt19937_64 rng(7);
    for (int n = 0; n < 2000; ++n) {
        const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        if (!a.is_zero())
            REQUIRE(a * a.inverse() == Rational(1));
    }
}
