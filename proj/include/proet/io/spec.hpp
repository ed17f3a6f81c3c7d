#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "proet/curve/nodal_curve.hpp"
#include "proet/hull/hull.hpp"
#include "proet/rep/representation.hpp"

namespace proet {

using Json = nlohmann::ordered_json;

// All loaders throw SpecParseError with the offending key or file in the
// message; validation errors from the constructors are rethrown as such.
Json load_json_file(const std::filesystem::path& path);

// {"components": [{"id", "branches": [...]}, ...],
//  "nodes": [{"a": [component, branch], "b": [component, branch]}, ...]}
NodalCurve curve_from_json(const Json& j);
Json curve_to_json(const NodalCurve& curve);
// A file path, or one of the built-in names "nodal_cubic", "cycle:<n>",
// "degenerate:<genus>,<components>".
NodalCurve load_curve(const std::string& ref, const std::filesystem::path& base = {});

// A name understood by FiniteGroup::named, or {"order", "table", "labels"}.
FiniteGroup group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);

// Row-major arrays of strings such as "t^2 + 2", "(t + 1)/t"; bare integers
// are accepted.
MatrixK matrix_from_json(const Json& j, std::uint32_t p);
Json matrix_to_json(const MatrixK& m);
// Reduced form with coefficients in 0..p-1, readable by parse_rational_function.
std::string k_text(const K& a);

enum class RepKind { kContinuous, kFiniteQuotient };

struct RepSpec {
  RepKind kind = RepKind::kContinuous;
  std::optional<NodalCurve> curve;
  std::optional<ContinuousRep> rep;          // kind == kContinuous
  std::optional<FiniteQuotientRep> quotient;  // kind == kFiniteQuotient
};

// "kind": "continuous" (default) or "finite_quotient".
// continuous: {"curve", "prime", "rank", "z": [matrix...],
//              "factors": [{"group", "generators": [label...], "images": [matrix...]}]}
// finite_quotient: {"group", "prime", "rank", "z": [label...],
//                   "factor_generators": [[label...]...],
//                   "images": {label: matrix} or [matrix in element order],
//                   "curve" (optional)}
// A relative "curve" path is resolved against `base`. "prime" may be left
// out when default_prime is nonzero.
RepSpec rep_from_json(const Json& j, const std::filesystem::path& base = {}, std::uint32_t default_prime = 0);
RepSpec load_rep(const std::filesystem::path& path, std::uint32_t default_prime = 0);

// {"levels": [group...], "maps": [[image...]...]}; "maps" may be omitted
// for a chain of cyclic groups, which then use reduction.
QuotientTower tower_from_json(const Json& j);
// A tower file, a single group name, or names joined by '<' as in "Z2<Z4<Z8".
QuotientTower load_tower(const std::string& ref);

Json presentation_to_json(const Pi1Presentation& pres);

}  // namespace proet
