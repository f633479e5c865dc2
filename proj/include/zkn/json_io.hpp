#ifndef ZKN_JSON_IO_HPP
#define ZKN_JSON_IO_HPP

#include <optional>

#include <json.hpp>

#include "zkn/hom_calc.hpp"
#include "zkn/mobius_groupoid.hpp"
#include "zkn/sections.hpp"

namespace zkn {

/// Objects are std::map-backed, so dump() emits keys in sorted order.
using Json = nlohmann::json;

// Terms are written as {"den","i","l","num"} in canonical (i, l) order.
// num and den are JSON integers when they fit in 64 bits, decimal strings
// otherwise.  Readers accept either form and reject unknown keys.

Json to_json(const RingElem& x);
Json to_json(const TwistedSection& s);
Json to_json(const ExtClass& p);
Json to_json(const GroupElem& g);
Json to_json(const CocyclePair& pair);
Json to_json(const HomProfile& profile);
Json to_json(const VerificationReport& report);
Json to_json(const ConeReport& report);

Rational rational_from_json(const Json& j);
RingElem ring_elem_from_json(const Json& j);
TwistedSection twisted_section_from_json(const Json& j);

/// Accepts the {"j","k","m","terms"} envelope or, when `params` is given, a
/// bare array of coefficients in basis_W order.  If both are present they
/// must agree.
ExtClass ext_class_from_json(const Json& j, const std::optional<ModuliParams>& params = std::nullopt);

/// {"a","b","c","d"}, each a TwistedSection over params.ring.
GroupElem group_elem_from_json(const Json& j, const ModuliParams& params);

/// Throws InvalidInput unless `j` is an object whose keys all lie in `allowed`.
void require_keys(const Json& j, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {});

}  // namespace zkn

#endif  // ZKN_JSON_IO_HPP
