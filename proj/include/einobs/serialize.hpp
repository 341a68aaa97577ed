#pragma once

// JSON forms of the library's values. Integers are JSON numbers when they
// fit in 64 bits and decimal strings otherwise; rationals are "p" or "p/q"
// strings.

#include <json.hpp>

#include "einobs/geography.hpp"
#include "einobs/obstructions.hpp"
#include "einobs/spinc.hpp"
#include "einobs/witness.hpp"

namespace einobs {

nlohmann::json json_integer(const Integer& v);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Invariants& inv);
// {c1_sq, status, d, provenance[], holonomy_count?}; d is null when
// c1_sq is not characteristic for `inv`.
nlohmann::json to_json(const SpinCDescriptor& d, const Invariants& inv);
nlohmann::json to_json(const Verdict& v);
// {expr, chen_x, chen_y, k, l, e, sigma, b1, verdicts[], chen_C_used, ...}
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const RegionDecision& d);

}  // namespace einobs
