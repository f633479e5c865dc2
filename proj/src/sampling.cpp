#include "zkn/sampling.hpp"

namespace zkn {

int uniform_int(SplitMix64& rng, int lo, int hi)
{
    const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
    const std::uint64_t limit = SplitMix64::max() - SplitMix64::max() % span;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return lo + static_cast<int>(draw % span);
}

Rational sample_coefficient(SplitMix64& rng, bool nonzero)
{
    int num = uniform_int(rng, -9, nonzero ? 8 : 9);
    if (nonzero && num >= 0)
        ++num;
    const int den = uniform_int(rng, 1, 3);
    return Rational(num, den);
}

RingElem sample_supported(const RingParams& params, const std::vector<Monomial>& support, SplitMix64& rng)
{
    std::vector<Term<Rational>> terms;
    terms.reserve(support.size());
    for (const auto& mono : support)
        terms.push_back({mono, sample_coefficient(rng)});
    return RingElem::from_terms(params, std::move(terms));
}

}  // namespace zkn
