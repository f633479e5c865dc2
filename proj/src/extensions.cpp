#include "zkn/extensions.hpp"

#include <algorithm>
#include <string>

namespace zkn {

int ModuliParams::max_degree() const { return std::min((2 * j - 2) / ring.k, ring.m - 1); }

void ModuliParams::validate() const
{
    ring.validate();
    if (j < 1)
        throw InvalidInput("j must be >= 1, got " + std::to_string(j));
}

std::vector<Monomial> basis_W(const ModuliParams& params)
{
    params.validate();
    std::vector<Monomial> out;
    for (int i = 1; i <= params.max_degree(); ++i)
        for (int l = params.k() * i - params.j + 1; l <= params.j - 1; ++l)
            out.push_back({i, l});
    return out;
}

ExtClass::ExtClass(ModuliParams params, RingElem p) : params_(params), p_(std::move(p))
{
    params_.validate();
    if (!(p_.params() == params_.ring))
        throw InvalidInput("extension class ring parameters do not match moduli parameters");
    if (!(good_part(p_, params_.j) == p_))
        throw InvalidInput("extension class has support outside the good sector");
}

ExtClass ExtClass::from_coordinates(const ModuliParams& params, const std::vector<Rational>& coords)
{
    const auto basis = basis_W(params);
    if (coords.size() != basis.size())
        throw InvalidInput("expected " + std::to_string(basis.size()) + " coordinates, got "
                           + std::to_string(coords.size()));
    std::vector<Term<Rational>> terms;
    for (std::size_t n = 0; n < basis.size(); ++n)
        terms.push_back({basis[n], coords[n]});
    return {params, RingElem::from_terms(params.ring, std::move(terms))};
}

std::vector<Rational> ExtClass::coordinates() const
{
    std::vector<Rational> out;
    for (const auto& mono : basis_W(params_))
        out.push_back(p_.coeff(mono.i, mono.l));
    return out;
}

CocycleReduction reduce_cocycle(const RingElem& y, const ModuliParams& params)
{
    params.validate();
    if (!(y.params() == params.ring))
        throw InvalidInput("cocycle ring parameters do not match moduli parameters");
    const int j = params.j;
    const int k = params.k();
    const RingElem base = restrict_to_ell(y);
    if (!band_part(base, j).is_zero())
        throw InvalidInput("class does not vanish on l");

    // Every monomial lands in exactly one of: U-coboundary (l >= j), V-coboundary
    // (l + j <= k i), or the band.  On the i = 0 layer the band is -j < l < j.
    const RingElem to_u = y.filter([j](Monomial mono) { return mono.l >= j; });
    const RingElem to_v = y.filter([j, k](Monomial mono) { return mono.l < j && mono.l + j <= k * mono.i; });
    const RingElem good = y - to_u - to_v;
    return {ExtClass(params, good), to_u.shift_z(-j), to_v.shift_z(j)};
}

bool class_is_zero(const RingElem& y, const ModuliParams& params)
{
    if (!(y.params() == params.ring))
        throw InvalidInput("cocycle ring parameters do not match moduli parameters");
    return band_part(y, params.j).is_zero();
}

std::vector<Monomial> ext1_basis(const ModuliParams& params)
{
    params.validate();
    std::vector<Monomial> out;
    for (int i = 0; i < params.m(); ++i)
        for (int l = params.k() * i - params.j + 1; l <= params.j - 1; ++l)
            out.push_back({i, l});
    return out;
}

ExtClass restrict_level(const ExtClass& p, int m_target)
{
    ModuliParams target = p.params();
    target.ring.m = m_target;
    return {target, truncate(p.p(), m_target)};
}

}  // namespace zkn
