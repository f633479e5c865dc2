#include "zkn/laurent_ring.hpp"

#include <bit>
#include <cstdint>
#include <numeric>

namespace zkn::detail {

namespace {

struct Scaled {
    std::int64_t denominator = 1;
    std::vector<std::int64_t> numerators;
    int max_bits = 0;
};

/// Rewrites the coefficients as integers over their least common denominator.
bool scale_to_integers(const std::vector<Term<Rational>>& terms, Scaled& out)
{
    std::int64_t lcm = 1;
    for (const auto& t : terms) {
        if (!t.coeff.is_small())
            return false;
        const std::int64_t d = t.coeff.small_den();
        if (__builtin_mul_overflow(lcm / std::gcd(lcm, d), d, &lcm))
            return false;
    }
    out.denominator = lcm;
    out.numerators.reserve(terms.size());
    std::uint64_t max_abs = 0;
    for (const auto& t : terms) {
        std::int64_t v;
        if (__builtin_mul_overflow(t.coeff.small_num(), lcm / t.coeff.small_den(), &v) || v == INT64_MIN)
            return false;
        out.numerators.push_back(v);
        max_abs = std::max(max_abs, static_cast<std::uint64_t>(v < 0 ? -v : v));
    }
    out.max_bits = std::bit_width(max_abs);
    return true;
}

}  // namespace

std::optional<std::vector<Term<Rational>>> multiply_common_denominator(const std::vector<Term<Rational>>& x,
                                                                      const std::vector<Term<Rational>>& y,
                                                                      int m)
{
    Scaled sx, sy;
    if (!scale_to_integers(x, sx) || !scale_to_integers(y, sy))
        return std::nullopt;
    const int count_bits = std::bit_width(std::min(x.size(), y.size()));
    if (sx.max_bits + sy.max_bits + count_bits > 126)
        return std::nullopt;

    int xlo = x.front().mono.l, xhi = xlo, ylo = y.front().mono.l, yhi = ylo;
    for (const auto& t : x) {
        xlo = std::min(xlo, t.mono.l);
        xhi = std::max(xhi, t.mono.l);
    }
    for (const auto& t : y) {
        ylo = std::min(ylo, t.mono.l);
        yhi = std::max(yhi, t.mono.l);
    }
    const int lo = xlo + ylo;
    const auto width = static_cast<std::size_t>(xhi + yhi - lo + 1);
    std::vector<__int128> acc(static_cast<std::size_t>(m) * width, 0);

    for (std::size_t a = 0; a < x.size(); ++a) {
        const __int128 va = sx.numerators[a];
        for (std::size_t b = 0; b < y.size(); ++b) {
            const int i = x[a].mono.i + y[b].mono.i;
            if (i >= m)
                break;
            acc[static_cast<std::size_t>(i) * width + static_cast<std::size_t>(x[a].mono.l + y[b].mono.l - lo)]
                += va * sy.numerators[b];
        }
    }

    const __int128 den = static_cast<__int128>(sx.denominator) * sy.denominator;
    std::vector<Term<Rational>> out;
    for (std::size_t s = 0; s < acc.size(); ++s) {
        if (acc[s] == 0)
            continue;
        const int i = static_cast<int>(s / width);
        const int l = static_cast<int>(s % width) + lo;
        out.push_back({{i, l}, Rational::from_int128(acc[s], den)});
    }
    return out;
}

}  // namespace zkn::detail
