#include <doctest.h>

#include "oracle.hpp"
#include "zkn/mobius_groupoid.hpp"

using namespace zkn;

namespace {

const ModuliParams kExample{{1, 3}, 2};

ExtClass point(const ModuliParams& params, std::vector<Rational> coords)
{
    return ExtClass::from_coordinates(params, coords);
}

GroupElem with_c(const ModuliParams& params, RingElem c)
{
    const RingParams& r = params.ring;
    return {params, TwistedSection(0, RingElem::one(r)), TwistedSection::zero(-2 * params.j, r),
            TwistedSection(2 * params.j, std::move(c)), TwistedSection(0, RingElem::one(r))};
}

std::vector<ModuliParams> grid()
{
    std::vector<ModuliParams> out;
    for (int k = 1; k <= 3; ++k)
        for (int j = 1; j <= 3; ++j)
            for (int m = 1; m <= 4; ++m)
                if (!basis_W({{k, m}, j}).empty())
                    out.push_back({{k, m}, j});
    return out;
}

}  // namespace

TEST_CASE("group elements")
{
    const RingParams& r = kExample.ring;
    CHECK(GroupElem::identity(kExample).det0() == Rational(1));
    CHECK_THROWS_WITH_AS(GroupElem::diagonal(kExample, 0, 1), "not invertible: det0 = 0", InvalidInput);
    CHECK_THROWS_AS(GroupElem(kExample, TwistedSection(0, RingElem::one(r)), TwistedSection::zero(0, r),
                              TwistedSection::zero(4, r), TwistedSection(0, RingElem::one(r))),
                    InvalidInput);
}

TEST_CASE("act on worked examples")
{
    const ExtClass p = point(kExample, {1, 1, 1});
    CHECK(act(GroupElem::identity(kExample), p) == p);
    CHECK(act(GroupElem::diagonal(kExample, 2, 1), p) == point(kExample, {2, 2, 2}));

    // c_U = z: evaluate (a p - z^j b)/(d - z^{-j} p c) with the reference
    // series, then keep the good sector.
    const RingElem c = RingElem::monomial(kExample.ring, 0, 1);
    const ExtClass q = point(kExample, {0, 1, 0});
    const int m = 3, j = 2;
    const oracle::Poly pp = oracle::from(q.p());
    const oracle::Poly den = oracle::add(oracle::constant(1), oracle::shift(oracle::mul(pp, oracle::from(c), m), -j), -1);
    const oracle::Poly quotient = oracle::mul(pp, oracle::inverse(den, m), m);
    const oracle::Poly good = oracle::filter(quotient, [](int i, int l) { return i >= 1 && i - 1 <= l && l <= 1; });
    CHECK(act(with_c(kExample, c), q).p() == oracle::to(good, kExample.ring));
    CHECK(act(with_c(kExample, c), q) == point(kExample, {0, 1, 1}));
}

TEST_CASE("act reduces to the Mobius formula when c = 0")
{
    SplitMix64 root(31);
    for (const ModuliParams& params : grid()) {
        for (int n = 0; n < 20; ++n) {
            SplitMix64 rng = root.split(static_cast<std::uint64_t>(n));
            const GroupElem s = sample_group_elem(params, rng);
            const GroupElem g(params, s.a(), s.b(), TwistedSection::zero(2 * params.j, params.ring), s.d());
            const ExtClass p = sample_ext_class(params, rng);
            const int m = params.m(), j = params.j, k = params.k();
            const oracle::Poly num = oracle::add(oracle::mul(oracle::from(g.a().rep()), oracle::from(p.p()), m),
                                                 oracle::shift(oracle::from(g.b().rep()), j), -1);
            const oracle::Poly q = oracle::mul(num, oracle::inverse(oracle::from(g.d().rep()), m), m);
            const oracle::Poly good =
                oracle::filter(q, [&](int i, int l) { return i >= 1 && k * i - j + 1 <= l && l <= j - 1; });
            REQUIRE(act(g, p).p() == oracle::to(good, params.ring));
        }
    }
}

TEST_CASE("cocycle pairs intertwine, checked with reference matrix products")
{
    SplitMix64 root(41);
    for (const ModuliParams& params : grid()) {
        for (int n = 0; n < 15; ++n) {
            SplitMix64 rng = root.split(static_cast<std::uint64_t>(n));
            const GroupElem g = sample_group_elem(params, rng);
            const ExtClass p = sample_ext_class(params, rng);
            const ExtClass q = act(g, p);
            const CocyclePair pair = cocycle_matrices(g, p);
            oracle::Mat a, b;
            for (std::size_t e = 0; e < 4; ++e) {
                REQUIRE(is_u_regular(pair.A.e[e]));
                REQUIRE(is_v_regular(pair.B.e[e]));
                a[e] = oracle::from(pair.A.e[e]);
                b[e] = oracle::from(pair.B.e[e]);
            }
            const int m = params.m(), j = params.j;
            REQUIRE(oracle::mat_mul(b, oracle::transition(oracle::from(p.p()), j), m)
                    == oracle::mat_mul(oracle::transition(oracle::from(q.p()), j), a, m));
            // det A restricted to l is the constant det0.
            const RingElem det = determinant(pair.A);
            REQUIRE(restrict_to_ell(det) == RingElem::constant(params.ring, g.det0()));
        }
    }
}

TEST_CASE("cocycle pairs of simple elements")
{
    const ExtClass p = point(kExample, {3, -1, Rational(1, 2)});
    const CocyclePair id = cocycle_matrices(GroupElem::identity(kExample), p);
    CHECK(id.A == RingMatrix2::identity(kExample.ring));
    CHECK(id.B == RingMatrix2::identity(kExample.ring));

    const GroupElem diag = GroupElem::diagonal(kExample, 5, Rational(-2, 3));
    const CocyclePair pair = cocycle_matrices(diag, p);
    CHECK(pair.A(0, 0) == RingElem::constant(kExample.ring, 5));
    CHECK(pair.A(1, 1) == RingElem::constant(kExample.ring, Rational(-2, 3)));
    CHECK(pair.A(0, 1).is_zero());
    CHECK(pair.A(1, 0).is_zero());

    CHECK(extract_group_elem(id, p, p) == GroupElem::identity(kExample));
    CHECK(extract_group_elem(pair, p, act(diag, p)) == diag);
    CHECK_THROWS_WITH_AS(extract_group_elem(pair, p, p), "not a normalized cocycle pair", InvalidInput);
    CocyclePair broken = pair;
    broken.A(0, 1) = RingElem::monomial(kExample.ring, 0, 0);
    CHECK_THROWS_AS(extract_group_elem(broken, p, act(diag, p)), InvalidInput);
}

TEST_CASE("induced product and inverse")
{
    const ExtClass p = point(kExample, {1, 2, 5});
    CHECK(induced_product(GroupElem::diagonal(kExample, 2, 1), GroupElem::diagonal(kExample, 3, 1), p)
          == GroupElem::diagonal(kExample, 6, 1));
    CHECK(induced_inverse(GroupElem::identity(kExample), p) == GroupElem::identity(kExample));
    CHECK(induced_inverse(GroupElem::diagonal(kExample, 4, 1), p) == GroupElem::diagonal(kExample, Rational(1, 4), 1));

    // At p = 0 the induced product is the matrix product.
    SplitMix64 root(51);
    for (const ModuliParams& params : grid()) {
        for (int n = 0; n < 10; ++n) {
            SplitMix64 rng = root.split(static_cast<std::uint64_t>(n));
            const GroupElem g1 = sample_group_elem(params, rng);
            const GroupElem g2 = sample_group_elem(params, rng);
            const int m = params.m();
            auto entry = [&](const TwistedSection& x1, const TwistedSection& y2, const TwistedSection& x2,
                             const TwistedSection& y3) {
                return oracle::add(oracle::mul(oracle::from(x1.rep()), oracle::from(y2.rep()), m),
                                   oracle::mul(oracle::from(x2.rep()), oracle::from(y3.rep()), m));
            };
            const GroupElem prod = induced_product(g1, g2, ExtClass::zero(params));
            REQUIRE(oracle::from(prod.a().rep()) == entry(g1.a(), g2.a(), g1.b(), g2.c()));
            REQUIRE(oracle::from(prod.b().rep()) == entry(g1.a(), g2.b(), g1.b(), g2.d()));
            REQUIRE(oracle::from(prod.c().rep()) == entry(g1.c(), g2.a(), g1.d(), g2.c()));
            REQUIRE(oracle::from(prod.d().rep()) == entry(g1.c(), g2.b(), g1.d(), g2.d()));
        }
    }
}

TEST_CASE("orbits at m = 2 are lines")
{
    SplitMix64 root(61);
    for (const ModuliParams& params : grid()) {
        if (params.m() != 2)
            continue;
        for (int n = 0; n < 30; ++n) {
            SplitMix64 rng = root.split(static_cast<std::uint64_t>(n));
            const GroupElem g = sample_group_elem(params, rng);
            const ExtClass p = sample_ext_class(params, rng);
            const Rational ratio = g.a().rep().coeff(0, 0) / g.d().rep().coeff(0, 0);
            REQUIRE(act(g, p).p() == ratio * p.p());
        }
    }
}

TEST_CASE("arrows")
{
    const ExtClass p = point(kExample, {1, 0, -1});
    SplitMix64 rng(3);
    const GroupElem g = sample_group_elem(kExample, rng);
    const Arrow x{g, p};
    CHECK(source(x) == p);
    CHECK(target(x) == act(g, p));
    CHECK(compose(inverse_arrow(x), x) == identity_arrow(p));
    CHECK_THROWS_WITH_AS(compose(x, x), "arrows are not composable", InvalidInput);
}

TEST_CASE("groupoid identities hold on the grid")
{
    for (const ModuliParams& params : grid()) {
        const VerificationReport report = verify_groupoid(params, 15, 12345);
        for (const auto& f : report.families) {
            INFO(f.name << " " << f.first_failure.value_or(""));
            REQUIRE(f.failed == 0);
            REQUIRE(f.checked == 15);
        }
        if (params.m() >= 2)
            REQUIRE(verify_inverse_system(params, 15, 12345).passed());
    }
    // Empty W: only p = 0, still a valid (degenerate) groupoid.
    const VerificationReport trivial = verify_groupoid({{3, 3}, 1}, 10, 1);
    CHECK(trivial.passed());
}

TEST_CASE("verification is reproducible per sample")
{
    const ModuliParams params{{2, 4}, 3};
    const VerificationReport a = verify_groupoid(params, 5, 77);
    const VerificationReport b = verify_groupoid(params, 5, 77);
    REQUIRE(a.families.size() == b.families.size());
    for (std::size_t n = 0; n < a.families.size(); ++n)
        CHECK(a.families[n].checked == b.families[n].checked);

    // Sample n is drawn from substream n, independent of the sample count.
    SplitMix64 r1 = SplitMix64(9).split(3), r2 = SplitMix64(9).split(3);
    CHECK(sample_group_elem(params, r1) == sample_group_elem(params, r2));
}
