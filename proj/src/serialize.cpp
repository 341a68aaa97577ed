#include "einobs/serialize.hpp"

#include "einobs/error.hpp"
#include "einobs/parser.hpp"

namespace einobs {

using nlohmann::json;

json json_integer(const Integer& v) {
  if (fits_int64(v)) return json(static_cast<std::int64_t>(to_int64(v)));
  return json(v.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error(ErrorKind::kInvalidArgument, "serialize.integer", "expected integer, got " + j.dump());
}

json to_json(const Invariants& inv) {
  json j{{"e", json_integer(inv.e)},
         {"sigma", json_integer(inv.sigma)},
         {"b1", json_integer(inv.b1)},
         {"two_e_plus_3sigma", json_integer(inv.two_e_plus_3sigma())},
         {"chi_h", to_string(inv.chi_h())}};
  if (inv.b2) {
    j["b2_plus"] = json_integer(inv.b2->plus);
    j["b2_minus"] = json_integer(inv.b2->minus);
  } else {
    j["b2_plus"] = "not computed";
    j["b2_minus"] = "not computed";
  }
  return j;
}

json to_json(const SpinCDescriptor& d, const Invariants& inv) {
  json j{{"c1_sq", json_integer(d.c1_sq())}, {"status", to_string(d.status())}};
  try {
    j["d"] = json_integer(formal_dimension(d.c1_sq(), inv));
  } catch (const Error&) {
    j["d"] = nullptr;
  }
  j["provenance"] = d.provenance();
  if (d.holonomy_count()) j["holonomy_count"] = json_integer(*d.holonomy_count());
  return j;
}

json to_json(const Verdict& v) {
  json j{{"rule", to_string(v.rule)}, {"status", to_string(v.status)}, {"notes", v.notes}};
  if (v.certificate) {
    const Certificate& c = *v.certificate;
    j["certificate"] = {{"lhs", to_string(c.lhs)},
                        {"rhs", to_string(c.rhs)},
                        {"relation", to_string(c.relation)},
                        {"lhs_meaning", c.lhs_meaning},
                        {"rhs_meaning", c.rhs_meaning}};
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

json to_json(const Witness& w) {
  json verdicts = json::array();
  for (const auto& v : w.verdicts) verdicts.push_back(to_json(v));
  const Invariants base_inv = block_invariants(ChenSurface{w.chen_x, w.chen_y, false});
  return json{{"expr", format(w.expr)},
              {"chen_x", json_integer(w.chen_x)},
              {"chen_y", json_integer(w.chen_y)},
              {"k", json_integer(w.k)},
              {"l", json_integer(w.l)},
              {"e", json_integer(w.invariants.e)},
              {"sigma", json_integer(w.invariants.sigma)},
              {"b1", json_integer(w.invariants.b1)},
              {"verdicts", verdicts},
              {"base_spinc", to_json(w.base_spinc, base_inv)},
              {"spinc", to_json(w.spinc, w.invariants)},
              {"chen_C_used", json_integer(w.chen_C_used)}};
}

json to_json(const RegionDecision& d) {
  return json{{"decision", to_string(d.kind)}, {"precision_bits", d.precision_reached}};
}

}  // namespace einobs
