#include "iwahori/serialize.hpp"

#include "iwahori/errors.hpp"

namespace iwahori {

using nlohmann::json;

json to_json(const CoeffQ& c) {
  json arr = json::array();
  for (const auto& [k, v] : c.terms()) arr.push_back(json::array({k, v.str()}));
  return arr;
}

CoeffQ coeff_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("coefficient must be an array of [q_exp, int_str]");
  std::vector<CoeffQ::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string()) {
      throw ParseError("bad coefficient term " + t.dump());
    }
    try {
      terms.emplace_back(t[0].get<int>(), BigInt(t[1].get<std::string>()));
    } catch (const std::runtime_error&) {
      throw ParseError("bad integer string " + t[1].dump());
    }
  }
  return CoeffQ::from_terms(std::move(terms));
}

json to_json(const GroupRingElem& f) {
  json arr = json::array();
  for (const auto& [mu, c] : f.grouped()) {
    arr.push_back({{"coweight", mu.coords()}, {"coeff", to_json(c)}});
  }
  return arr;
}

GroupRingElem group_ring_from_json(const json& j, std::size_t rank) {
  if (!j.is_array()) throw ParseError("group ring element must be a JSON array");
  GroupRingElem f(rank);
  for (const auto& rec : j) {
    if (!rec.contains("coweight") || !rec.contains("coeff")) {
      throw ParseError("record needs 'coweight' and 'coeff': " + rec.dump());
    }
    auto coords = rec.at("coweight").get<std::vector<int>>();
    if (coords.size() != rank) throw ParseError("coweight of wrong rank: " + rec.dump());
    f += GroupRingElem::term(Coweight(std::span<const int>(coords)), coeff_from_json(rec.at("coeff")));
  }
  return f;
}

}  // namespace iwahori
