#include "zkn/mobius_groupoid.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace zkn {

namespace {

void check_params(const ModuliParams& a, const ModuliParams& b)
{
    if (!(a == b))
        throw InvalidInput("moduli parameters differ");
}

const char* const kNotNormalized = "not a normalized cocycle pair";

}  // namespace

GroupElem::GroupElem(ModuliParams params, TwistedSection a, TwistedSection b, TwistedSection c, TwistedSection d)
    : params_(params), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
{
    params_.validate();
    const int j = params_.j;
    if (a_.twist() != 0 || d_.twist() != 0 || b_.twist() != -2 * j || c_.twist() != 2 * j)
        throw InvalidInput("group element entries must be sections of O(0), O(-2j), O(2j), O(0)");
    for (const auto* s : {&a_, &b_, &c_, &d_})
        if (!(s->params() == params_.ring))
            throw InvalidInput("group element ring parameters do not match moduli parameters");
    if (det0().is_zero())
        throw InvalidInput("not invertible: det0 = 0");
}

GroupElem GroupElem::identity(const ModuliParams& params) { return diagonal(params, 1, 1); }

GroupElem GroupElem::diagonal(const ModuliParams& params, const Rational& a, const Rational& d)
{
    const RingParams& ring = params.ring;
    return {params, TwistedSection(0, RingElem::constant(ring, a)), TwistedSection::zero(-2 * params.j, ring),
            TwistedSection::zero(2 * params.j, ring), TwistedSection(0, RingElem::constant(ring, d))};
}

Rational GroupElem::det0() const { return a_.rep().coeff(0, 0) * d_.rep().coeff(0, 0); }

RingMatrix2 RingMatrix2::identity(const RingParams& params)
{
    const RingElem one = RingElem::one(params);
    const RingElem zero(params);
    return {{one, zero, zero, one}};
}

RingMatrix2 operator*(const RingMatrix2& x, const RingMatrix2& y)
{
    RingMatrix2 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out(r, c) = x(r, 0) * y(0, c) + x(r, 1) * y(1, c);
    return out;
}

RingElem determinant(const RingMatrix2& x) { return x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0); }

RingMatrix2 adjugate(const RingMatrix2& x) { return {{x(1, 1), -x(0, 1), -x(1, 0), x(0, 0)}}; }

RingMatrix2 inverse(const RingMatrix2& x)
{
    const RingElem det_inv = invert_unit(determinant(x));
    RingMatrix2 out = adjugate(x);
    for (auto& entry : out.e)
        entry = entry * det_inv;
    return out;
}

RingMatrix2 transition_matrix(const ExtClass& p)
{
    const RingParams& ring = p.params().ring;
    const int j = p.params().j;
    return {{RingElem::monomial(ring, 0, j), p.p(), RingElem(ring), RingElem::monomial(ring, 0, -j)}};
}

bool intertwines(const CocyclePair& pair, const ExtClass& p, const ExtClass& p_target)
{
    if (!std::all_of(pair.A.e.begin(), pair.A.e.end(), [](const RingElem& x) { return is_u_regular(x); }))
        return false;
    if (!std::all_of(pair.B.e.begin(), pair.B.e.end(), [](const RingElem& x) { return is_v_regular(x); }))
        return false;
    // B E_p == E_p' A entrywise; the transition matrices only shift and add.
    const int j = p.params().j;
    const RingElem& pp = p.p();
    const RingElem& qq = p_target.p();
    const RingMatrix2& A = pair.A;
    const RingMatrix2& B = pair.B;
    return B(0, 0).shift_z(j) == A(0, 0).shift_z(j) + qq * A(1, 0)
           && B(0, 0) * pp + B(0, 1).shift_z(-j) == A(0, 1).shift_z(j) + qq * A(1, 1)
           && B(1, 0).shift_z(j) == A(1, 0).shift_z(-j)
           && B(1, 0) * pp + B(1, 1).shift_z(-j) == A(1, 1).shift_z(-j);
}

RingElem mobius_quotient(const GroupElem& g, const ExtClass& p)
{
    check_params(g.params(), p.params());
    const int j = g.params().j;
    const RingElem numerator = g.a().rep() * p.p() - g.b().rep().shift_z(j);
    const RingElem denominator = g.d().rep() - (p.p() * g.c().rep()).shift_z(-j);
    return numerator * invert_unit(denominator);
}

ExtClass act(const GroupElem& g, const ExtClass& p)
{
    check_params(g.params(), p.params());
    const ModuliParams& params = p.params();
    const int j = params.j;
    const RingElem& c = g.c().rep();
    const RingElem ap = g.a().rep() * p.p();
    const RingElem diag = g.d().rep() - minus_part((p.p() * c).shift_z(-j));
    const Rational d00_inv = g.d().rep().coeff(0, 0).inverse();

    RingElem q = good_part(mobius_quotient(g, p), j);
    for (int iter = 0; iter <= params.m(); ++iter) {
        const RingElem residual = band_part(q * diag + p.p() * plus_part((q * c).shift_z(-j)) - ap, j);
        if (residual.is_zero())
            return {params, q};
        q = q - d00_inv * residual;
    }
    throw ConsistencyFailure("act: correction did not terminate");
}

namespace {

/// The forced pair for g at p, given the already computed target p' = g.p.
CocyclePair forced_pair(const GroupElem& g, const ExtClass& p, const ExtClass& p_target)
{
    const int j = p.params().j;
    const RingElem& pp = p.p();
    const RingElem& qq = p_target.p();
    const RingElem& c = g.c().rep();
    const RingElem x = (pp * c).shift_z(-j);
    const RingElem x_target = (qq * c).shift_z(-j);

    CocyclePair pair;
    pair.A(0, 0) = g.a().rep() - plus_part(x_target);
    pair.A(1, 0) = c;
    pair.A(1, 1) = g.d().rep() + plus_part(x);

    const RingElem q = (qq * pair.A(1, 1) - pair.A(0, 0) * pp).shift_z(j) - pp * qq * c;
    const auto parts = plus_parts(q, j);
    if (!parts.plus_lt_2j.is_zero())
        throw ConsistencyFailure("cocycle_matrices: off-diagonal equation has no regular solution");
    pair.A(0, 1) = g.b().rep() - parts.plus_ge_2j.shift_z(-2 * j);

    pair.B(0, 0) = g.a().rep() + minus_part(x_target);
    pair.B(1, 0) = c.shift_z(-2 * j);
    pair.B(1, 1) = g.d().rep() - minus_part(x);
    pair.B(0, 1) = g.b().rep().shift_z(2 * j) + minus_part(q);
    return pair;
}

}  // namespace

CocyclePair cocycle_matrices(const GroupElem& g, const ExtClass& p)
{
    const ExtClass p_target = act(g, p);
    CocyclePair pair = forced_pair(g, p, p_target);
    if (!intertwines(pair, p, p_target))
        throw ConsistencyFailure("cocycle_matrices: intertwining identity fails");
    return pair;
}

GroupElem extract_group_elem(const CocyclePair& pair, const ExtClass& p, const ExtClass& p_target)
{
    check_params(p.params(), p_target.params());
    const ModuliParams& params = p.params();
    for (const auto& entry : pair.A.e)
        if (!(entry.params() == params.ring) || !is_u_regular(entry))
            throw InvalidInput(kNotNormalized);
    const int j = params.j;
    const int k = params.k();
    const RingElem& c = pair.A(1, 0);
    if (!fits_twist(c, 2 * j))
        throw InvalidInput(kNotNormalized);
    const RingElem b = pair.A(0, 1).filter([j, k](Monomial mono) { return mono.l <= k * mono.i - 2 * j; });

    const GroupElem g(params, TwistedSection(0, minus_part(pair.A(0, 0))), TwistedSection(-2 * j, b),
                      TwistedSection(2 * j, c), TwistedSection(0, minus_part(pair.A(1, 1))));
    // Once the target matches, the forced pair is the only normalized
    // isomorphism E_p -> E_p' lifting g, so equality settles the question.
    if (!(act(g, p) == p_target) || !(forced_pair(g, p, p_target) == pair))
        throw InvalidInput(kNotNormalized);
    return g;
}

GroupElem induced_product(const GroupElem& g1, const GroupElem& g2, const ExtClass& p)
{
    check_params(g1.params(), g2.params());
    check_params(g1.params(), p.params());
    const ExtClass mid = act(g2, p);
    const ExtClass end = act(g1, mid);
    const CocyclePair first = forced_pair(g2, p, mid);
    const CocyclePair second = forced_pair(g1, mid, end);
    return extract_group_elem({second.A * first.A, second.B * first.B}, p, end);
}

GroupElem induced_inverse(const GroupElem& g, const ExtClass& p)
{
    check_params(g.params(), p.params());
    const ExtClass p_target = act(g, p);
    const CocyclePair pair = forced_pair(g, p, p_target);
    return extract_group_elem({inverse(pair.A), inverse(pair.B)}, p_target, p);
}

GroupElem restrict_level(const GroupElem& g, int m_target)
{
    ModuliParams target = g.params();
    target.ring.m = m_target;
    auto cut = [m_target](const TwistedSection& s) { return TwistedSection(s.twist(), truncate(s.rep(), m_target)); };
    return {target, cut(g.a()), cut(g.b()), cut(g.c()), cut(g.d())};
}

ExtClass source(const Arrow& x) { return x.p; }

ExtClass target(const Arrow& x) { return act(x.g, x.p); }

Arrow identity_arrow(const ExtClass& p) { return {GroupElem::identity(p.params()), p}; }

Arrow inverse_arrow(const Arrow& x) { return {induced_inverse(x.g, x.p), act(x.g, x.p)}; }

Arrow compose(const Arrow& later, const Arrow& earlier)
{
    if (!(source(later) == target(earlier)))
        throw InvalidInput("arrows are not composable");
    return {induced_product(later.g, earlier.g, earlier.p), earlier.p};
}

GroupElem sample_group_elem(const ModuliParams& params, SplitMix64& rng)
{
    const RingParams& ring = params.ring;
    const int j = params.j;
    auto section = [&](int twist, bool unit) {
        RingElem rep = sample_supported(ring, h0_basis(twist, ring), rng);
        if (unit)
            rep = rep - RingElem::constant(ring, rep.coeff(0, 0))
                  + RingElem::constant(ring, sample_coefficient(rng, true));
        return TwistedSection(twist, std::move(rep));
    };
    TwistedSection a = section(0, true);
    TwistedSection b = section(-2 * j, false);
    TwistedSection c = section(2 * j, false);
    TwistedSection d = section(0, true);
    return {params, std::move(a), std::move(b), std::move(c), std::move(d)};
}

ExtClass sample_ext_class(const ModuliParams& params, SplitMix64& rng)
{
    return {params, sample_supported(params.ring, basis_W(params), rng)};
}

bool VerificationReport::passed() const
{
    return std::all_of(families.begin(), families.end(), [](const FamilyResult& f) { return f.failed == 0; });
}

const FamilyResult* VerificationReport::family(const std::string& name) const
{
    for (const auto& f : families)
        if (f.name == name)
            return &f;
    return nullptr;
}

namespace {

class Tally {
public:
    explicit Tally(std::vector<std::string> names)
    {
        for (auto& n : names)
            results_.push_back({std::move(n), 0, 0, std::nullopt});
    }

    /// Runs one check; exceptions count as failures.
    void check(std::size_t family, long sample, const std::function<bool()>& body)
    {
        FamilyResult& f = results_[family];
        ++f.checked;
        std::string why;
        bool ok = false;
        try {
            ok = body();
            if (!ok)
                why = "identity does not hold";
        } catch (const std::exception& e) {
            why = e.what();
        }
        if (!ok) {
            ++f.failed;
            if (!f.first_failure)
                f.first_failure = "sample " + std::to_string(sample) + ": " + why;
        }
    }

    std::vector<FamilyResult> take() { return std::move(results_); }

private:
    std::vector<FamilyResult> results_;
};

enum GroupoidFamily : std::size_t {
    kIdentityAction,
    kIdentityLaws,
    kCompatibility,
    kAssociativity,
    kInverseLaws,
    kIntertwining,
    kCocycleComposition,
    kUniqueness,
    kSourceTarget,
};

}  // namespace

VerificationReport verify_groupoid(const ModuliParams& params, long samples, std::uint64_t seed)
{
    params.validate();
    Tally tally({"identity_action", "identity_laws", "compatibility", "associativity", "inverse_laws",
                 "intertwining", "cocycle_composition", "uniqueness", "source_target"});
    const SplitMix64 root(seed);
    const GroupElem e = GroupElem::identity(params);

    for (long n = 0; n < samples; ++n) {
        SplitMix64 rng = root.split(static_cast<std::uint64_t>(n));
        const GroupElem g1 = sample_group_elem(params, rng);
        const GroupElem g2 = sample_group_elem(params, rng);
        const GroupElem g3 = sample_group_elem(params, rng);
        const ExtClass p = sample_ext_class(params, rng);

        tally.check(kIdentityAction, n, [&] { return act(e, p) == p; });
        tally.check(kIdentityLaws, n,
                    [&] { return induced_product(e, g1, p) == g1 && induced_product(g1, e, p) == g1; });
        tally.check(kCompatibility, n,
                    [&] { return act(g1, act(g2, p)) == act(induced_product(g1, g2, p), p); });
        tally.check(kAssociativity, n, [&] {
            const GroupElem left = induced_product(induced_product(g1, g2, act(g3, p)), g3, p);
            const GroupElem right = induced_product(g1, induced_product(g2, g3, p), p);
            return left == right;
        });
        tally.check(kInverseLaws, n, [&] {
            const ExtClass q = act(g1, p);
            const GroupElem inv = induced_inverse(g1, p);
            return induced_product(inv, g1, p) == e && induced_product(g1, inv, q) == e && act(inv, q) == p;
        });
        tally.check(kIntertwining, n, [&] {
            for (const auto* g : {&g1, &g2, &g3})
                if (!intertwines(cocycle_matrices(*g, p), p, act(*g, p)))
                    return false;
            return true;
        });
        tally.check(kCocycleComposition, n, [&] {
            const CocyclePair composed_pair = cocycle_matrices(induced_product(g1, g2, p), p);
            const CocyclePair first = cocycle_matrices(g2, p);
            const CocyclePair second = cocycle_matrices(g1, act(g2, p));
            return composed_pair.A == second.A * first.A && composed_pair.B == second.B * first.B;
        });
        tally.check(kUniqueness, n, [&] {
            return extract_group_elem(cocycle_matrices(g1, p), p, act(g1, p)) == g1;
        });
        tally.check(kSourceTarget, n, [&] {
            const Arrow x{g2, p};
            const Arrow y{g1, target(x)};
            const Arrow yx = compose(y, x);
            const Arrow x_inv = inverse_arrow(x);
            const Arrow unit = identity_arrow(p);
            return source(yx) == source(x) && target(yx) == target(y) && source(x_inv) == target(x)
                   && target(x_inv) == source(x) && source(unit) == p && target(unit) == p
                   && compose(x_inv, x) == unit && compose(x, unit) == x;
        });
    }
    return {params, samples, seed, tally.take()};
}

VerificationReport verify_inverse_system(const ModuliParams& params, long samples, std::uint64_t seed)
{
    params.validate();
    if (params.m() < 2)
        throw InvalidInput("inverse-system check needs m >= 2");
    Tally tally({"restrict_act", "restrict_product", "restrict_inverse"});
    const SplitMix64 root(seed);
    const int lower = params.m() - 1;

    for (long n = 0; n < samples; ++n) {
        SplitMix64 rng = root.split(static_cast<std::uint64_t>(n));
        const GroupElem g1 = sample_group_elem(params, rng);
        const GroupElem g2 = sample_group_elem(params, rng);
        const ExtClass p = sample_ext_class(params, rng);
        const GroupElem h1 = restrict_level(g1, lower);
        const GroupElem h2 = restrict_level(g2, lower);
        const ExtClass q = restrict_level(p, lower);

        tally.check(0, n, [&] { return restrict_level(act(g1, p), lower) == act(h1, q); });
        tally.check(1, n, [&] {
            return restrict_level(induced_product(g1, g2, p), lower) == induced_product(h1, h2, q);
        });
        tally.check(2, n, [&] { return restrict_level(induced_inverse(g1, p), lower) == induced_inverse(h1, q); });
    }
    return {params, samples, seed, tally.take()};
}

}  // namespace zkn
