#include "zkn/json_io.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace zkn {

namespace {

Json integer_json(const Rational& q, bool numerator)
{
    if (q.is_small())
        return numerator ? Json(q.small_num()) : Json(q.small_den());
    const mpq_class big = q.to_mpq();
    const mpz_class& z = numerator ? big.get_num() : big.get_den();
    if (z.fits_slong_p())
        return Json(static_cast<std::int64_t>(z.get_si()));
    return Json(z.get_str());
}

std::string integer_text(const Json& j, const char* what)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? std::to_string(j.get<std::uint64_t>()) : std::to_string(j.get<std::int64_t>());
    if (j.is_string())
        return j.get<std::string>();
    throw InvalidInput(std::string(what) + " must be an integer or a decimal string");
}

int small_int(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        throw InvalidInput(std::string(what) + " must be an integer");
    const auto v = j.get<std::int64_t>();
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT32_MAX))
        throw InvalidInput(std::string(what) + " out of range");
    if (v < INT32_MIN || v > INT32_MAX)
        throw InvalidInput(std::string(what) + " out of range");
    return static_cast<int>(v);
}

Json terms_json(const RingElem& x)
{
    Json terms = Json::array();
    for (const auto& t : x.terms())
        terms.push_back({{"den", integer_json(t.coeff, false)},
                         {"i", t.mono.i},
                         {"l", t.mono.l},
                         {"num", integer_json(t.coeff, true)}});
    return terms;
}

RingElem terms_from_json(const Json& j, const RingParams& ring)
{
    if (!j.is_array())
        throw InvalidInput("\"terms\" must be an array");
    std::vector<Term<Rational>> terms;
    for (const auto& t : j) {
        require_keys(t, {"i", "l", "num"}, {"den"});
        const std::string num = integer_text(t["num"], "num");
        const std::string den = t.contains("den") ? integer_text(t["den"], "den") : "1";
        if (!den.empty() && den[0] == '-')
            throw InvalidInput("den must be positive");
        terms.push_back({{small_int(t["i"], "i"), small_int(t["l"], "l")}, Rational::parse(num + "/" + den)});
    }
    return RingElem::from_terms(ring, std::move(terms));
}

RingParams ring_from_json(const Json& j)
{
    RingParams ring{small_int(j["k"], "k"), small_int(j["m"], "m")};
    ring.validate();
    return ring;
}

}  // namespace

void require_keys(const Json& j, std::initializer_list<const char*> required, std::initializer_list<const char*> optional)
{
    if (!j.is_object())
        throw InvalidInput("expected a JSON object");
    for (const char* key : required)
        if (!j.contains(key))
            throw InvalidInput(std::string("missing field \"") + key + "\"");
    for (const auto& item : j.items()) {
        auto same = [&](const char* key) { return item.key() == key; };
        if (std::none_of(required.begin(), required.end(), same) && std::none_of(optional.begin(), optional.end(), same))
            throw InvalidInput("unknown field \"" + item.key() + "\"");
    }
}

Json to_json(const RingElem& x)
{
    return {{"k", x.params().k}, {"m", x.params().m}, {"terms", terms_json(x)}};
}

Json to_json(const TwistedSection& s)
{
    Json out = to_json(s.rep());
    out["s"] = s.twist();
    return out;
}

Json to_json(const ExtClass& p)
{
    Json out = to_json(p.p());
    out["j"] = p.params().j;
    return out;
}

Json to_json(const GroupElem& g)
{
    return {{"a", to_json(g.a())}, {"b", to_json(g.b())}, {"c", to_json(g.c())}, {"d", to_json(g.d())}};
}

Json to_json(const CocyclePair& pair)
{
    Json a = Json::array();
    Json b = Json::array();
    for (const auto& x : pair.A.e)
        a.push_back(to_json(x));
    for (const auto& x : pair.B.e)
        b.push_back(to_json(x));
    return {{"A", a}, {"B", b}};
}

Json to_json(const HomProfile& profile)
{
    return {{"dim_ext1", profile.dim_ext1},
            {"dim_hom", profile.dim_hom},
            {"dim_hom_L2L1", profile.dim_hom_L2L1},
            {"dim_ker_d1", profile.dim_ker_d1},
            {"dim_ker_d2", profile.dim_ker_d2}};
}

Json to_json(const VerificationReport& report)
{
    Json families = Json::array();
    for (const auto& f : report.families)
        families.push_back({{"checked", f.checked},
                            {"failed", f.failed},
                            {"first_failure", f.first_failure ? Json(*f.first_failure) : Json(nullptr)},
                            {"name", f.name},
                            {"passed", f.failed == 0}});
    return {{"families", families},
            {"j", report.params.j},
            {"k", report.params.k()},
            {"m", report.params.m()},
            {"passed", report.passed()},
            {"samples", report.samples},
            {"seed", report.seed}};
}

Json to_json(const ConeReport& report)
{
    Json relations = Json::array();
    for (const auto& r : report.relations)
        relations.push_back({{"a", r.a}, {"b", r.b}, {"holds", r.holds}});
    return {{"k", report.k}, {"m", report.m}, {"passed", report.passed()}, {"relations", relations}};
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational::parse(integer_text(j, "coefficient"));
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    throw InvalidInput("coefficient must be an integer or a string \"n/d\"");
}

RingElem ring_elem_from_json(const Json& j)
{
    require_keys(j, {"k", "m", "terms"});
    return terms_from_json(j["terms"], ring_from_json(j));
}

TwistedSection twisted_section_from_json(const Json& j)
{
    require_keys(j, {"k", "m", "s", "terms"});
    return {small_int(j["s"], "s"), terms_from_json(j["terms"], ring_from_json(j))};
}

ExtClass ext_class_from_json(const Json& j, const std::optional<ModuliParams>& params)
{
    if (j.is_array()) {
        if (!params)
            throw InvalidInput("coefficient-vector shorthand needs --k, --j and --m");
        std::vector<Rational> coords;
        for (const auto& x : j)
            coords.push_back(rational_from_json(x));
        return ExtClass::from_coordinates(*params, coords);
    }
    require_keys(j, {"j", "k", "m", "terms"});
    const ModuliParams parsed{ring_from_json(j), small_int(j["j"], "j")};
    parsed.validate();
    if (params && !(*params == parsed))
        throw InvalidInput("extension class parameters do not match --k/--j/--m");
    return {parsed, terms_from_json(j["terms"], parsed.ring)};
}

GroupElem group_elem_from_json(const Json& j, const ModuliParams& params)
{
    require_keys(j, {"a", "b", "c", "d"});
    auto section = [&](const char* key) {
        TwistedSection s = twisted_section_from_json(j[key]);
        if (!(s.params() == params.ring))
            throw InvalidInput(std::string("group element entry \"") + key + "\" has the wrong k or m");
        return s;
    };
    return {params, section("a"), section("b"), section("c"), section("d")};
}

}  // namespace zkn
