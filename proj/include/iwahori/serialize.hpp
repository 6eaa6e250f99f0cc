#pragma once

#include <json.hpp>

#include "iwahori/group_ring.hpp"

namespace iwahori {

/// [[q_exp, "int"], ...] in ascending exponent order.
nlohmann::json to_json(const CoeffQ& c);
CoeffQ coeff_from_json(const nlohmann::json& j);

/// [{"coweight":[...], "coeff":[[q_exp,"int"],...]}, ...] in canonical order.
/// Integers are decimal strings so that no precision is lost.
nlohmann::json to_json(const GroupRingElem& f);
GroupRingElem group_ring_from_json(const nlohmann::json& j, std::size_t rank);

}  // namespace iwahori
