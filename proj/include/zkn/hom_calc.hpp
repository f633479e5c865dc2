#ifndef ZKN_HOM_CALC_HPP
#define ZKN_HOM_CALC_HPP

#include <optional>
#include <vector>

#include "zkn/linalg.hpp"
#include "zkn/mobius_groupoid.hpp"

namespace zkn {

using RationalMatrix = DenseMatrix<Rational>;

/// The witness condition as a linear map in (a, d, c).
///
/// Columns: the coefficients of a over h0_basis(0), then of d over
/// h0_basis(0), then of c over h0_basis(2j).  Rows: ext1_basis().
struct LinearSystem {
    std::vector<Monomial> section_index;  // h0_basis(0), shared by a and d
    std::vector<Monomial> c_index;        // h0_basis(2j)
    std::vector<Monomial> rows;           // ext1_basis
    RationalMatrix matrix;

    Eigen::Index a_column(std::size_t n) const { return static_cast<Eigen::Index>(n); }
    Eigen::Index d_column(std::size_t n) const { return static_cast<Eigen::Index>(section_index.size() + n); }
    Eigen::Index c_column(std::size_t n) const
    {
        return static_cast<Eigen::Index>(2 * section_index.size() + n);
    }
};

/// The class whose vanishing says that g carries p to p':
///   p' d - a p - z^{-j} p p' c + p' (z^{-j} p c)^+ + p (z^{-j} p' c)^+.
RingElem witness_cocycle(const GroupElem& g, const ExtClass& p, const ExtClass& p_target);

/// Whether g lifts to an isomorphism E_p -> E_p'.  b plays no part.
/// Throws ConsistencyFailure if the condition holds but act(g, p) != p'.
bool witness_condition(const GroupElem& g, const ExtClass& p, const ExtClass& p_target);

LinearSystem witness_system(const ExtClass& p, const ExtClass& p_target);

/// A group element carrying p to p' (with b = 0), or nullopt when E_p and
/// E_p' are not isomorphic.
std::optional<GroupElem> isom_decide(const ExtClass& p, const ExtClass& p_target);

/// d1 on H^0(O)^2 and d2 on H^0(O(2j)), both with rows ext1_basis().
/// d2 is reduced modulo the image of d1, so its kernel is the space of c
/// whose class is hit by d1.
struct SpectralDifferentials {
    std::vector<Monomial> rows;
    RationalMatrix d1;
    RationalMatrix d2;
};

SpectralDifferentials spectral_differentials(const ExtClass& p, const ExtClass& p_target);

struct HomProfile {
    long dim_hom = 0;
    long dim_ext1 = 0;
    long dim_ker_d1 = 0;
    long dim_ker_d2 = 0;
    long dim_hom_L2L1 = 0;

    friend bool operator==(const HomProfile&, const HomProfile&) = default;
};

/// Dimensions of Hom(E_p, E_p') and Ext^1(E_p, E_p').
HomProfile hom_ext_dims(const ExtClass& p, const ExtClass& p_target);

/// dim End(O(j) + O(-j)) = 2 h0(0) + h0(2j) + h0(-2j).
long split_end_dim(const ModuliParams& params);

/// dim Ext^1(O(j) + O(-j), O(j) + O(-j)) = h1(-2j).
long split_ext1_dim(const ModuliParams& params);

struct BruteForceResult {
    long dim = 0;
    int degree = 0;
    std::vector<CocyclePair> basis;
};

int default_degree_bound(const ModuliParams& params);

/// Hom(E_p, E_p') by solving B E_p = E_p' A directly, with A entries on
/// U-regular monomials of z-degree <= D and B entries on V-regular monomials
/// with l >= k i - D.  The dimension must agree at D and D + 1.
BruteForceResult brute_force_hom(const ExtClass& p, const ExtClass& p_target, std::optional<int> degree = std::nullopt);

}  // namespace zkn

#endif  // ZKN_HOM_CALC_HPP
