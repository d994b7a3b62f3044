#pragma once

// JSON forms of group/family specifications and of the reports.
//
//   group:  {"kind":"cyclic","n":6} | {"kind":"product","factors":[...]}
//           | {"kind":"symmetric","n":4} | {"kind":"dihedral","n":5}
//           | {"kind":"quaternion8"} | {"kind":"cayley","table":[[...]]}
//   family: {"subgroups":[[0,3],[0,2,4]]} | {"minimal":true}
//           | {"conjugacy_class_of":[0,3]}
//
// Integer coefficients are written as decimal strings.

#include <string>
#include <string_view>

#include "json.hpp"
#include "singideal/coset_groupoid.hpp"
#include "singideal/group.hpp"
#include "singideal/hls.hpp"
#include "singideal/ideal.hpp"

namespace singideal {

using json = nlohmann::json;

/// Inline JSON when the text starts with '{' or '[', otherwise a file path.
/// Throws Error{parse_error}.
json load_json_argument(std::string_view text);

/// Throws Error{parse_error} for malformed specs; constructor errors pass
/// through unchanged.
FiniteGroup parse_group_spec(const json& spec, std::size_t order_cap = default_order_cap);

struct ParsedFamily {
    SubgroupFamily family;
    bool auto_closed = false;  // input was not invariant and got closed
};

/// Non-invariant input is closed under conjugation when auto_close is set and
/// rejected with Error{not_invariant} otherwise.
ParsedFamily parse_family_spec(const FiniteGroup& g, const json& spec, bool auto_close = true);

json to_json(const Subgroup& x);
json to_json(const SubgroupFamily& family);
json to_json(std::span<const Integer> coeffs);
json to_json(const IdealReport& report);
IdealReport report_from_json(const json& j);

json dump_groupoid(const CosetGroupoid& cg);

/// Two-space indented JSON with a trailing newline.
std::string serialize(const json& j);

}  // namespace singideal
