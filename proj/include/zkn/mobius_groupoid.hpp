#ifndef ZKN_MOBIUS_GROUPOID_HPP
#define ZKN_MOBIUS_GROUPOID_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zkn/extensions.hpp"
#include "zkn/sampling.hpp"
#include "zkn/sections.hpp"

namespace zkn {

/// Automorphism g = (a, b; c, d) of O(j) + O(-j) on the truncated neighbourhood:
/// a, d in H^0(O), b in H^0(O(-2j)), c in H^0(O(2j)).  Invertible iff
/// det0 = a00 d00 is nonzero (b vanishes on l because j >= 1).
class GroupElem {
public:
    GroupElem() = default;
    GroupElem(ModuliParams params, TwistedSection a, TwistedSection b, TwistedSection c, TwistedSection d);

    static GroupElem identity(const ModuliParams& params);
    static GroupElem diagonal(const ModuliParams& params, const Rational& a, const Rational& d);

    const ModuliParams& params() const { return params_; }
    const TwistedSection& a() const { return a_; }
    const TwistedSection& b() const { return b_; }
    const TwistedSection& c() const { return c_; }
    const TwistedSection& d() const { return d_; }

    /// Determinant restricted to l.
    Rational det0() const;

    friend bool operator==(const GroupElem&, const GroupElem&) = default;

private:
    ModuliParams params_;
    TwistedSection a_, b_, c_, d_;
};

/// 2x2 matrix over the overlap ring, row-major.
struct RingMatrix2 {
    std::array<RingElem, 4> e;

    const RingElem& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }
    RingElem& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }

    static RingMatrix2 identity(const RingParams& params);

    friend bool operator==(const RingMatrix2&, const RingMatrix2&) = default;
};

RingMatrix2 operator*(const RingMatrix2& x, const RingMatrix2& y);
RingElem determinant(const RingMatrix2& x);
RingMatrix2 adjugate(const RingMatrix2& x);

/// Inverse of a matrix whose determinant is an l-constant unit.
RingMatrix2 inverse(const RingMatrix2& x);

/// The transition matrix (z^j, p; 0, z^{-j}) of E_p.
RingMatrix2 transition_matrix(const ExtClass& p);

/// An isomorphism E_p -> E_p' written chart-wise: A regular on U, B regular
/// on V, with B E_p = E_p' A.
struct CocyclePair {
    RingMatrix2 A;
    RingMatrix2 B;

    friend bool operator==(const CocyclePair&, const CocyclePair&) = default;
};

/// Regularity of A on U, of B on V, and B E_p = E_p' A, all exact.
bool intertwines(const CocyclePair& pair, const ExtClass& p, const ExtClass& p_target);

/// (a p - z^j b_U) / (d - z^{-j} p c_U) in the overlap ring, before any
/// projection to the good sector.
RingElem mobius_quotient(const GroupElem& g, const ExtClass& p);

/// Target of the arrow (g, p): the unique p' in normal form for which g lifts
/// to an isomorphism E_p -> E_p'.
///
/// p' solves band(p'(d - (z^{-j} p c)^-) + p (z^{-j} p' c)^+ - a p) = 0, the
/// condition for the off-diagonal chart equation to be solvable.  The good
/// part of the Mobius quotient solves it up to the cross terms p'(.)^+ and
/// p(.)^+; we start there and correct degree by degree.  The operator is d00
/// plus a part that raises u-degree, so at most m corrections are needed.
ExtClass act(const GroupElem& g, const ExtClass& p);

/// The normalized isomorphism (A_g(p), B_g(p)) from E_p to E_{g.p}.
///
/// With p' = g.p, X = z^{-j} p c and X' = z^{-j} p' c:
///   A = ( a - X'^+ ,  b - z^{-2j} Q^{+,>=2j} )     B = ( a + X'^- ,  z^{2j} b + Q^- )
///       ( c        ,  d + X^+               )         ( z^{-2j} c,  d - X^-        )
/// where Q = z^j (p' A22 - A11 p) - p p' c.  The diagonal corrections are
/// forced by V-regularity of B11, B22; Q^{+,<2j} vanishes exactly because p'
/// solves the condition in act().
CocyclePair cocycle_matrices(const GroupElem& g, const ExtClass& p);

/// Recovers g from a normalized isomorphism E_p -> E_p'.  Throws InvalidInput
/// if the pair is not of the normal shape or not invertible.
GroupElem extract_group_elem(const CocyclePair& pair, const ExtClass& p, const ExtClass& p_target);

/// g1 ._p g2: the element whose cocycle pair at p is A_{g1}(g2.p) A_{g2}(p).
GroupElem induced_product(const GroupElem& g1, const GroupElem& g2, const ExtClass& p);

/// g^{(-1)_p}: the element whose cocycle pair at g.p inverts (A_g(p), B_g(p)).
GroupElem induced_inverse(const GroupElem& g, const ExtClass& p);

/// Image of g in the group at modulus m' <= m.
GroupElem restrict_level(const GroupElem& g, int m_target);

/// An arrow (g, p) of the groupoid, from p to g.p.
struct Arrow {
    GroupElem g;
    ExtClass p;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

ExtClass source(const Arrow& x);
ExtClass target(const Arrow& x);
Arrow identity_arrow(const ExtClass& p);
Arrow inverse_arrow(const Arrow& x);

/// later o earlier; requires source(later) == target(earlier).
Arrow compose(const Arrow& later, const Arrow& earlier);

GroupElem sample_group_elem(const ModuliParams& params, SplitMix64& rng);
ExtClass sample_ext_class(const ModuliParams& params, SplitMix64& rng);

/// Pass/fail tally for one family of identities.
struct FamilyResult {
    std::string name;
    long checked = 0;
    long failed = 0;
    std::optional<std::string> first_failure;
};

struct VerificationReport {
    ModuliParams params;
    long samples = 0;
    std::uint64_t seed = 0;
    std::vector<FamilyResult> families;

    bool passed() const;
    const FamilyResult* family(const std::string& name) const;
};

/// Checks the groupoid identities exactly on `samples` seeded random tuples
/// (g1, g2, g3, p): action of the identity, identity laws, compatibility of
/// the action with the induced product, associativity, inverse laws, the
/// intertwining identity, composition of cocycle pairs, uniqueness of the
/// extracted element, and source/target bookkeeping of the structure maps.
/// Sample n depends only on (seed, n).
VerificationReport verify_groupoid(const ModuliParams& params, long samples, std::uint64_t seed);

/// Checks that restriction from m to m - 1 commutes with act, the induced
/// product and the induced inverse.  Requires m >= 2.
VerificationReport verify_inverse_system(const ModuliParams& params, long samples, std::uint64_t seed);

}  // namespace zkn

#endif  // ZKN_MOBIUS_GROUPOID_HPP
