#include "hadamono/report.hpp"

#include <nlohmann/json.hpp>

namespace hadamono {

CheckReport CheckReport::pass(Rational lhs, Rational rhs, std::string relation) {
  CheckReport r;
  r.passed = true;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.relation = std::move(relation);
  return r;
}

CheckReport CheckReport::fail(Rational lhs, Rational rhs, std::string relation,
                              std::string witness) {
  CheckReport r;
  r.passed = false;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.relation = std::move(relation);
  r.witness = std::move(witness);
  return r;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j{{"passed", passed},
                   {"lhs", format_rational(lhs)},
                   {"rhs", format_rational(rhs)},
                   {"relation", relation}};
  if (!note.empty()) j["note"] = note;
  if (!witness.empty()) j["witness"] = nlohmann::json::parse(witness);
  return j;
}

}  // namespace hadamono
