#include "zkn/sections.hpp"

#include <algorithm>
#include <string>

namespace zkn {

bool fits_twist(const RingElem& rep, int twist)
{
    const int k = rep.params().k;
    return std::all_of(rep.terms().begin(), rep.terms().end(), [&](const auto& t) {
        return t.mono.l >= 0 && t.mono.l <= k * t.mono.i + twist;
    });
}

TwistedSection::TwistedSection(int twist, RingElem rep) : twist_(twist), rep_(std::move(rep))
{
    if (!fits_twist(rep_, twist_))
        throw InvalidInput("not a global section of O(" + std::to_string(twist_)
                           + "): support must satisfy 0 <= l <= k*i + s");
}

TwistedSection operator*(const TwistedSection& a, const TwistedSection& b)
{
    return {a.twist() + b.twist(), a.rep() * b.rep()};
}

std::vector<Monomial> h0_basis(int twist, const RingParams& params)
{
    params.validate();
    std::vector<Monomial> out;
    for (int i = 0; i < params.m; ++i)
        for (int l = 0; l <= params.k * i + twist; ++l)
            out.push_back({i, l});
    return out;
}

long h0_dim(int twist, const RingParams& params)
{
    params.validate();
    long dim = 0;
    for (int i = 0; i < params.m; ++i)
        dim += std::max(0, params.k * i + twist + 1);
    return dim;
}

long h1_dim(int twist, const RingParams& params)
{
    params.validate();
    long dim = 0;
    for (int i = 0; i < params.m; ++i)
        dim += std::max(0, -twist - 1 - params.k * i);
    return dim;
}

std::vector<Monomial> h1_basis(int twist, const RingParams& params)
{
    params.validate();
    std::vector<Monomial> out;
    for (int i = 0; i < params.m; ++i)
        for (int l = params.k * i + twist + 1; l <= -1; ++l)
            out.push_back({i, l});
    return out;
}

bool ConeReport::passed() const
{
    return std::all_of(relations.begin(), relations.end(), [](const ConeRelation& r) { return r.holds; });
}

ConeReport cone_check(int k, int m)
{
    const RingParams params{k, m};
    params.validate();
    auto x = [&](int a) { return RingElem::monomial(params, 1, a); };
    ConeReport report{k, m, {}};
    for (int a = 0; a + 2 <= k; ++a) {
        for (int b = a + 2; b <= k; ++b) {
            const RingElem rel = x(a) * x(b) - x(a + 1) * x(b - 1);
            report.relations.push_back({a, b, rel.is_zero()});
        }
    }
    return report;
}

}  // namespace zkn
