#include <doctest.h>

#include "oracle.hpp"
#include "zkn/sampling.hpp"
#include "zkn/sections.hpp"

using namespace zkn;

namespace {

/// dim H^1(O(s)) as the cokernel of the Cech differential
/// C(U) + C(V) -> C(U n V), (f, g) -> f - z^s g, computed layer by layer
/// over a window of z-degrees wide enough to contain the cokernel.
long cech_h1(int s, RingParams p)
{
    long dim = 0;
    for (int i = 0; i < p.m; ++i)
        for (int l = -60; l <= 60; ++l) {
            const bool from_u = l >= 0;                // f = z^l u^i, U-regular
            const bool from_v = l - s <= p.k * i;      // g = z^{l-s} u^i, V-regular
            if (!from_u && !from_v)
                ++dim;
        }
    return dim;
}

}  // namespace

TEST_CASE("h0 bases")
{
    const auto b = h0_basis(2, {5, 1});
    REQUIRE(b.size() == 3);
    CHECK(b[0] == Monomial{0, 0});
    CHECK(b[2] == Monomial{0, 2});
    CHECK(h0_dim(0, {1, 3}) == 6);
    CHECK(h0_basis(-4, {1, 3}).empty());
    for (int k = 1; k <= 4; ++k)
        for (int m = 1; m <= 5; ++m)
            for (int s = -9; s <= 9; ++s) {
                const RingParams p{k, m};
                REQUIRE(h0_dim(s, p)
                        == oracle::count_monomials(m, [](int) { return 0; }, [&](int i) { return k * i + s; }));
                REQUIRE(static_cast<long>(h0_basis(s, p).size()) == h0_dim(s, p));
            }
}

TEST_CASE("h1 dimensions")
{
    CHECK(h1_dim(0, {1, 3}) == 0);
    CHECK(h1_dim(-4, {1, 3}) == 6);
    CHECK(h1_dim(-2, {5, 2}) == 1);
    for (int k = 1; k <= 4; ++k)
        for (int m = 1; m <= 5; ++m)
            for (int s = -12; s <= 10; ++s) {
                const RingParams p{k, m};
                REQUIRE(h1_dim(s, p) == cech_h1(s, p));
                REQUIRE(static_cast<long>(h1_basis(s, p).size()) == h1_dim(s, p));
                if (s >= 0)
                    REQUIRE(h1_dim(s, p) == 0);
            }
    for (int j = 1; j <= 4; ++j)
        for (int k = 1; k <= 3; ++k)
            for (int m = 1; m <= 4; ++m) {
                long band = 0;
                for (int i = 0; i < m; ++i)
                    band += std::max(0, 2 * j - 1 - k * i);
                REQUIRE(h1_dim(-2 * j, {k, m}) == band);
            }
}

TEST_CASE("twisted sections")
{
    const RingParams p{1, 3};
    CHECK_NOTHROW(TwistedSection(2, RingElem::monomial(p, 1, 3)));
    CHECK_THROWS_AS(TwistedSection(2, RingElem::monomial(p, 1, 4)), InvalidInput);
    CHECK_THROWS_AS(TwistedSection(0, RingElem::monomial(p, 1, -1)), InvalidInput);
    const TwistedSection s(1, RingElem::monomial(p, 0, 1));
    CHECK(s.v_rep() == RingElem::monomial(p, 0, 0));

    SplitMix64 root(4);
    for (int n = 0; n < 200; ++n) {
        SplitMix64 rng = root.split(static_cast<std::uint64_t>(n));
        const RingParams q{uniform_int(rng, 1, 3), uniform_int(rng, 1, 4)};
        const int s1 = uniform_int(rng, -3, 4), s2 = uniform_int(rng, -3, 4);
        const TwistedSection a(s1, sample_supported(q, h0_basis(s1, q), rng));
        const TwistedSection b(s2, sample_supported(q, h0_basis(s2, q), rng));
        const TwistedSection ab = a * b;
        REQUIRE(ab.twist() == s1 + s2);
        REQUIRE(fits_twist(ab.rep(), s1 + s2));
        REQUIRE(is_v_regular(ab.v_rep()));
    }
}

TEST_CASE("cone relations")
{
    CHECK(cone_check(1, 3).relations.empty());
    const ConeReport k2 = cone_check(2, 2);
    REQUIRE(k2.relations.size() == 1);
    CHECK(k2.relations[0].a == 0);
    CHECK(k2.relations[0].b == 2);
    // All pairs 0 <= a, a + 2 <= b <= k.
    CHECK(cone_check(4, 3).relations.size() == 6);
    for (int k = 1; k <= 6; ++k)
        for (int m = 1; m <= 4; ++m)
            REQUIRE(cone_check(k, m).passed());
}
