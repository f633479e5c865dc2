#ifndef ZKN_SAMPLING_HPP
#define ZKN_SAMPLING_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "zkn/laurent_ring.hpp"

namespace zkn {

/// SplitMix64 (Steele, Lea, Flood 2014).  Satisfies UniformRandomBitGenerator.
///
/// split(n) derives the generator for substream n from the current state
/// without advancing it, so sample n of a run is reproducible on its own.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    SplitMix64 split(std::uint64_t stream) const
    {
        SplitMix64 mixer(state_ ^ (stream * 0xd1b54a32d192ed03ULL));
        return SplitMix64(mixer());
    }

private:
    std::uint64_t state_;
};

/// Uniform integer in [lo, hi] by rejection, independent of the standard
/// library's distribution implementations.
int uniform_int(SplitMix64& rng, int lo, int hi);

/// n / d with n uniform in [-9, 9] (or its nonzero part) and d uniform in {1, 2, 3}.
Rational sample_coefficient(SplitMix64& rng, bool nonzero = false);

/// Random element supported on `support` with sample_coefficient() entries.
RingElem sample_supported(const RingParams& params, const std::vector<Monomial>& support, SplitMix64& rng);

}  // namespace zkn

#endif  // ZKN_SAMPLING_HPP
