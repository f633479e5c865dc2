#ifndef ZKN_EXTENSIONS_HPP
#define ZKN_EXTENSIONS_HPP

#include <vector>

#include "zkn/laurent_ring.hpp"

namespace zkn {

/// Ring parameters plus the splitting type j of the bundles under study.
struct ModuliParams {
    RingParams ring;
    int j = 1;

    int k() const { return ring.k; }
    int m() const { return ring.m; }

    /// Largest u-degree carrying extension data: min(floor((2j-2)/k), m-1).
    int max_degree() const;

    void validate() const;

    friend bool operator==(const ModuliParams&, const ModuliParams&) = default;
};

/// Index set of the extension space: (i, l) with k i - j + 1 <= l <= j - 1 and
/// 1 <= i <= max_degree(), in (i, l) order.
std::vector<Monomial> basis_W(const ModuliParams& params);

/// Extension class in normal form: the upper-right entry p of the transition
/// matrix (z^j, p; 0, z^{-j}), supported on basis_W.
class ExtClass {
public:
    ExtClass() = default;
    ExtClass(ModuliParams params, RingElem p);

    static ExtClass zero(const ModuliParams& params) { return {params, RingElem(params.ring)}; }

    /// Coefficients listed in basis_W order.
    static ExtClass from_coordinates(const ModuliParams& params, const std::vector<Rational>& coords);

    const ModuliParams& params() const { return params_; }
    const RingElem& p() const { return p_; }
    std::vector<Rational> coordinates() const;

    friend bool operator==(const ExtClass&, const ExtClass&) = default;

private:
    ModuliParams params_;
    RingElem p_;
};

/// Y = p + z^j f_U + z^{-j} f_V with f_U regular on U and f_V regular on V.
struct CocycleReduction {
    ExtClass p;
    RingElem f_u;
    RingElem f_v;
};

/// Normal form of the cocycle Y of an extension of O(j) by O(-j) that splits on l.
CocycleReduction reduce_cocycle(const RingElem& y, const ModuliParams& params);

/// Whether Y is a coboundary, i.e. has no term in the Ext^1 band.
bool class_is_zero(const RingElem& y, const ModuliParams& params);

/// Band monomials spanning Ext^1(O(j), O(-j)), all u-degrees including 0.
std::vector<Monomial> ext1_basis(const ModuliParams& params);

/// Image in the inverse system at modulus m' <= m.
ExtClass restrict_level(const ExtClass& p, int m_target);

}  // namespace zkn

#endif  // ZKN_EXTENSIONS_HPP
