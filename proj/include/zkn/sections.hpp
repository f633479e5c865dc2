#ifndef ZKN_SECTIONS_HPP
#define ZKN_SECTIONS_HPP

#include <vector>

#include "zkn/laurent_ring.hpp"

namespace zkn {

/// Global section of O(s) on the truncated neighbourhood, stored by its
/// U-chart representative.  The V-chart representative is z^{-s} times it,
/// which is V-regular exactly when every term has l <= k i + s.
class TwistedSection {
public:
    TwistedSection() = default;
    TwistedSection(int twist, RingElem rep);

    static TwistedSection zero(int twist, RingParams params) { return {twist, RingElem(params)}; }

    int twist() const { return twist_; }
    const RingElem& rep() const { return rep_; }
    const RingParams& params() const { return rep_.params(); }

    /// The V-chart representative z^{-s} rep.
    RingElem v_rep() const { return rep_.shift_z(-twist_); }

    friend bool operator==(const TwistedSection&, const TwistedSection&) = default;

private:
    int twist_ = 0;
    RingElem rep_;
};

/// True iff 0 <= l <= k i + s for every term.
bool fits_twist(const RingElem& rep, int twist);

/// Product of sections of O(s) and O(s'), a section of O(s + s').
TwistedSection operator*(const TwistedSection& a, const TwistedSection& b);

/// Monomial basis of H^0(O(s)): 0 <= l <= k i + s, 0 <= i < m, in (i, l) order.
std::vector<Monomial> h0_basis(int twist, const RingParams& params);

long h0_dim(int twist, const RingParams& params);

/// dim H^1(O(s)) = sum_i max(0, -s - 1 - k i), from the two-chart Cech complex.
long h1_dim(int twist, const RingParams& params);

/// Monomials z^l u^i with k i + s + 1 <= l <= -1 spanning H^1(O(s)).
std::vector<Monomial> h1_basis(int twist, const RingParams& params);

/// One cone relation x_a x_b - x_{a+1} x_{b-1} under x_i -> z^i u.
struct ConeRelation {
    int a = 0;
    int b = 0;
    bool holds = false;
};

struct ConeReport {
    int k = 1;
    int m = 1;
    std::vector<ConeRelation> relations;

    bool passed() const;
};

/// Checks every relation x_a x_b = x_{a+1} x_{b-1} with 0 <= a, a + 2 <= b <= k.
ConeReport cone_check(int k, int m);

}  // namespace zkn

#endif  // ZKN_SECTIONS_HPP
