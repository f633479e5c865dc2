#ifndef ZKN_LAURENT_RING_HPP
#define ZKN_LAURENT_RING_HPP

#include <algorithm>
#include <compare>
#include <optional>
#include <type_traits>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zkn/errors.hpp"
#include "zkn/rational.hpp"

namespace zkn {

/// The overlap ring C[z, 1/z][u] / (u^m) of the two charts of Z_k.
///
/// The U chart has coordinates (z, u), the V chart (1/z, z^k u); a monomial
/// z^l u^i is regular on U iff l >= 0 and regular on V iff l <= k i.
struct RingParams {
    int k = 1;
    int m = 1;

    void validate() const
    {
        if (k < 1)
            throw InvalidInput("k must be >= 1, got " + std::to_string(k));
        if (m < 1)
            throw InvalidInput("m must be >= 1, got " + std::to_string(m));
    }

    friend bool operator==(const RingParams&, const RingParams&) = default;
};

/// z^l u^i.  Ordered by i, then l.
struct Monomial {
    int i = 0;
    int l = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

template <typename Scalar>
struct Term {
    Monomial mono;
    Scalar coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

namespace detail {

/// Truncating product of two sorted term lists of small rationals, computed
/// as an integer convolution over the common denominator.  Returns nullopt
/// when an operand is not small or the 128-bit accumulator could overflow.
std::optional<std::vector<Term<Rational>>> multiply_common_denominator(const std::vector<Term<Rational>>& x,
                                                                      const std::vector<Term<Rational>>& y,
                                                                      int m);

}  // namespace detail

/// Finitely supported element of the truncated overlap ring.
///
/// Terms are kept sorted by (i, l) with nonzero coefficients and 0 <= i < m,
/// so structural equality is ring equality.
template <typename Scalar>
class LaurentPoly {
public:
    using scalar_type = Scalar;
    using term_type = Term<Scalar>;

    LaurentPoly() = default;
    explicit LaurentPoly(RingParams params) : params_(params) { params_.validate(); }

    /// Sums duplicate monomials and drops zeros.  Rejects i outside [0, m).
    static LaurentPoly from_terms(RingParams params, std::vector<term_type> terms)
    {
        LaurentPoly out(params);
        for (const auto& t : terms)
            if (t.mono.i < 0 || t.mono.i >= params.m)
                throw InvalidInput("u-exponent " + std::to_string(t.mono.i) + " outside [0, "
                                   + std::to_string(params.m) + ")");
        std::stable_sort(terms.begin(), terms.end(),
                         [](const term_type& a, const term_type& b) { return a.mono < b.mono; });
        for (auto& t : terms) {
            if (!out.terms_.empty() && out.terms_.back().mono == t.mono)
                out.terms_.back().coeff = out.terms_.back().coeff + t.coeff;
            else
                out.terms_.push_back(std::move(t));
        }
        std::erase_if(out.terms_, [](const term_type& t) { return t.coeff == Scalar(0); });
        return out;
    }

    static LaurentPoly monomial(RingParams params, int i, int l, Scalar coeff = Scalar(1))
    {
        LaurentPoly out(params);
        if (i < 0)
            throw InvalidInput("negative u-exponent");
        if (i < params.m && !(coeff == Scalar(0)))
            out.terms_.push_back({{i, l}, std::move(coeff)});
        return out;
    }

    static LaurentPoly constant(RingParams params, Scalar coeff) { return monomial(params, 0, 0, std::move(coeff)); }
    static LaurentPoly one(RingParams params) { return constant(params, Scalar(1)); }

    const RingParams& params() const { return params_; }
    const std::vector<term_type>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(int i, int l) const
    {
        const Monomial key{i, l};
        auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                   [](const term_type& t, const Monomial& k) { return t.mono < k; });
        if (it != terms_.end() && it->mono == key)
            return it->coeff;
        return Scalar(0);
    }

    /// Keeps the terms whose monomial satisfies `pred`.
    template <typename Pred>
    LaurentPoly filter(Pred pred) const
    {
        LaurentPoly out(params_);
        for (const auto& t : terms_)
            if (pred(t.mono))
                out.terms_.push_back(t);
        return out;
    }

    /// Multiplication by z^e.
    LaurentPoly shift_z(int e) const
    {
        LaurentPoly out = *this;
        for (auto& t : out.terms_)
            t.mono.l += e;
        return out;
    }

    LaurentPoly operator-() const
    {
        LaurentPoly out = *this;
        for (auto& t : out.terms_)
            t.coeff = -t.coeff;
        return out;
    }

    LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
    LaurentPoly& operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

    friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y)
    {
        check_same(x, y);
        LaurentPoly out(x.params_);
        out.terms_.reserve(x.terms_.size() + y.terms_.size());
        auto a = x.terms_.begin();
        auto b = y.terms_.begin();
        while (a != x.terms_.end() || b != y.terms_.end()) {
            if (b == y.terms_.end() || (a != x.terms_.end() && a->mono < b->mono)) {
                out.terms_.push_back(*a++);
            } else if (a == x.terms_.end() || b->mono < a->mono) {
                out.terms_.push_back(*b++);
            } else {
                Scalar c = a->coeff + b->coeff;
                if (!(c == Scalar(0)))
                    out.terms_.push_back({a->mono, std::move(c)});
                ++a;
                ++b;
            }
        }
        return out;
    }

    friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) { return x + (-y); }

    /// Truncating product: terms with i >= m vanish.
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y)
    {
        check_same(x, y);
        LaurentPoly out(x.params_);
        if (x.is_zero() || y.is_zero())
            return out;
        const int m = x.params_.m;
        if constexpr (std::is_same_v<Scalar, Rational>) {
            if (auto fast = detail::multiply_common_denominator(x.terms_, y.terms_, m)) {
                out.terms_ = std::move(*fast);
                return out;
            }
        }
        const auto [xlo, xhi] = x.l_range();
        const auto [ylo, yhi] = y.l_range();
        const int lo = xlo + ylo;
        const int width = xhi + yhi - lo + 1;
        std::vector<Scalar> acc(static_cast<std::size_t>(m) * static_cast<std::size_t>(width));
        for (const auto& tx : x.terms_) {
            for (const auto& ty : y.terms_) {
                const int i = tx.mono.i + ty.mono.i;
                if (i >= m)
                    break;
                const auto slot = static_cast<std::size_t>(i) * static_cast<std::size_t>(width)
                                  + static_cast<std::size_t>(tx.mono.l + ty.mono.l - lo);
                acc[slot] += tx.coeff * ty.coeff;
            }
        }
        for (std::size_t s = 0; s < acc.size(); ++s) {
            if (!(acc[s] == Scalar(0))) {
                const int i = static_cast<int>(s / static_cast<std::size_t>(width));
                const int l = static_cast<int>(s % static_cast<std::size_t>(width)) + lo;
                out.terms_.push_back({{i, l}, std::move(acc[s])});
            }
        }
        return out;
    }

    friend LaurentPoly operator*(const Scalar& c, const LaurentPoly& x)
    {
        LaurentPoly out(x.params_);
        if (c == Scalar(0))
            return out;
        out.terms_.reserve(x.terms_.size());
        for (const auto& t : x.terms_)
            out.terms_.push_back({t.mono, c * t.coeff});
        return out;
    }

    friend bool operator==(const LaurentPoly& x, const LaurentPoly& y)
    {
        return x.params_ == y.params_ && x.terms_ == y.terms_;
    }

    /// Smallest and largest z-exponent present; (0, 0) for zero.
    std::pair<int, int> l_range() const
    {
        if (terms_.empty())
            return {0, 0};
        int lo = terms_.front().mono.l;
        int hi = lo;
        for (const auto& t : terms_) {
            lo = std::min(lo, t.mono.l);
            hi = std::max(hi, t.mono.l);
        }
        return {lo, hi};
    }

    /// Same coefficients viewed in a ring with a different modulus; used by
    /// truncate() and by exact-lift helpers in tests.
    LaurentPoly with_modulus(int m) const
    {
        RingParams p = params_;
        p.m = m;
        LaurentPoly out(p);
        for (const auto& t : terms_)
            if (t.mono.i < m)
                out.terms_.push_back(t);
        return out;
    }

private:
    static void check_same(const LaurentPoly& x, const LaurentPoly& y)
    {
        if (!(x.params_ == y.params_))
            throw InvalidInput("ring parameters differ: (k=" + std::to_string(x.params_.k) + ", m="
                               + std::to_string(x.params_.m) + ") vs (k=" + std::to_string(y.params_.k)
                               + ", m=" + std::to_string(y.params_.m) + ")");
    }

    RingParams params_;
    std::vector<term_type> terms_;
};

using RingElem = LaurentPoly<Rational>;

template <typename Scalar>
bool is_u_regular(const LaurentPoly<Scalar>& x)
{
    return std::all_of(x.terms().begin(), x.terms().end(), [](const auto& t) { return t.mono.l >= 0; });
}

template <typename Scalar>
bool is_v_regular(const LaurentPoly<Scalar>& x)
{
    const int k = x.params().k;
    return std::all_of(x.terms().begin(), x.terms().end(),
                       [k](const auto& t) { return t.mono.l <= k * t.mono.i; });
}

/// The i = 0 layer, i.e. the restriction to the zero section.
template <typename Scalar>
LaurentPoly<Scalar> restrict_to_ell(const LaurentPoly<Scalar>& x)
{
    return x.filter([](Monomial mono) { return mono.i == 0; });
}

template <typename Scalar>
bool vanishes_on_ell(const LaurentPoly<Scalar>& x)
{
    return x.is_zero() || x.terms().front().mono.i >= 1;
}

/// Drops terms with i >= m'.  A ring homomorphism onto the coarser quotient.
template <typename Scalar>
LaurentPoly<Scalar> truncate(const LaurentPoly<Scalar>& x, int m_target)
{
    if (m_target < 1)
        throw InvalidInput("truncation modulus must be >= 1");
    if (m_target > x.params().m)
        throw InvalidInput("cannot refine truncation from m=" + std::to_string(x.params().m) + " to m="
                           + std::to_string(m_target));
    return x.with_modulus(m_target);
}

/// Inverse of a unit whose i = 0 layer is a nonzero constant c0, via the
/// finite geometric series c0^{-1} * sum_{t<m} (1 - x/c0)^t.
template <typename Scalar>
LaurentPoly<Scalar> invert_unit(const LaurentPoly<Scalar>& x)
{
    const auto& params = x.params();
    const auto& ts = x.terms();
    const bool constant_layer = !ts.empty() && ts.front().mono == Monomial{0, 0}
                                && (ts.size() == 1 || ts[1].mono.i >= 1);
    if (!constant_layer)
        throw InvalidInput("not an l-constant unit");
    const Scalar c0_inv = Scalar(1) / ts.front().coeff;
    const auto one = LaurentPoly<Scalar>::one(params);
    const LaurentPoly<Scalar> q = one - c0_inv * x;
    LaurentPoly<Scalar> sum = one;
    for (int t = 1; t < params.m; ++t)
        sum = one + q * sum;
    return c0_inv * sum;
}

/// Sector decomposition relative to splitting type j of a function vanishing
/// on the zero section:
///   succ: l >= j                 (z^{-j} succ is U-regular)
///   prec: l + j <= k i, l < j    (z^{j} prec is V-regular)
///   good: k i - j + 1 <= l <= j - 1
/// When k i >= 2j the first two conditions overlap; succ takes precedence.
template <typename Scalar>
struct SectorSplit {
    LaurentPoly<Scalar> succ;
    LaurentPoly<Scalar> good;
    LaurentPoly<Scalar> prec;
};

template <typename Scalar>
SectorSplit<Scalar> sector_split(const LaurentPoly<Scalar>& x, int j)
{
    if (j < 1)
        throw InvalidInput("splitting type j must be >= 1");
    if (!vanishes_on_ell(x))
        throw InvalidInput("does not vanish on l");
    const int k = x.params().k;
    SectorSplit<Scalar> out{LaurentPoly<Scalar>(x.params()), LaurentPoly<Scalar>(x.params()),
                            LaurentPoly<Scalar>(x.params())};
    out.succ = x.filter([j](Monomial mono) { return mono.l >= j; });
    out.prec = x.filter([j, k](Monomial mono) { return mono.l < j && mono.l + j <= k * mono.i; });
    out.good = x.filter([j, k](Monomial mono) { return mono.l < j && mono.l + j > k * mono.i; });
    return out;
}

/// Good-sector projection.  Unlike sector_split this accepts i = 0 terms and
/// discards them along with the other sectors.
template <typename Scalar>
LaurentPoly<Scalar> good_part(const LaurentPoly<Scalar>& x, int j)
{
    const int k = x.params().k;
    return x.filter([j, k](Monomial mono) { return mono.i >= 1 && mono.l <= j - 1 && mono.l >= k * mono.i - j + 1; });
}

/// Terms with k i - j + 1 <= l <= j - 1 in every u-degree, i = 0 included.
/// These monomials span Ext^1(O(j), O(-j)) on the truncated neighbourhood.
template <typename Scalar>
LaurentPoly<Scalar> band_part(const LaurentPoly<Scalar>& x, int j)
{
    const int k = x.params().k;
    return x.filter([j, k](Monomial mono) { return mono.l <= j - 1 && mono.l >= k * mono.i - j + 1; });
}

/// Y^+ (terms not regular on V) and its split at z-degree 2j.
template <typename Scalar>
struct PlusParts {
    LaurentPoly<Scalar> plus;
    LaurentPoly<Scalar> plus_ge_2j;
    LaurentPoly<Scalar> plus_lt_2j;
};

template <typename Scalar>
LaurentPoly<Scalar> plus_part(const LaurentPoly<Scalar>& x)
{
    const int k = x.params().k;
    return x.filter([k](Monomial mono) { return mono.l > k * mono.i; });
}

template <typename Scalar>
LaurentPoly<Scalar> minus_part(const LaurentPoly<Scalar>& x)
{
    const int k = x.params().k;
    return x.filter([k](Monomial mono) { return mono.l <= k * mono.i; });
}

template <typename Scalar>
PlusParts<Scalar> plus_parts(const LaurentPoly<Scalar>& x, int j)
{
    PlusParts<Scalar> out{plus_part(x), LaurentPoly<Scalar>(x.params()), LaurentPoly<Scalar>(x.params())};
    out.plus_ge_2j = out.plus.filter([j](Monomial mono) { return mono.l >= 2 * j; });
    out.plus_lt_2j = out.plus.filter([j](Monomial mono) { return mono.l < 2 * j; });
    return out;
}

}  // namespace zkn

#endif  // ZKN_LAURENT_RING_HPP
