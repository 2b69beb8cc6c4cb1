#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "hadamono/rational.hpp"

namespace hadamono {

/// Outcome of a single checked inequality or identity. Both sides are exact
/// rationals; `relation` says how they were compared ("<=", "==", ">=").
/// `witness` holds a JSON description of the first offending input, or is
/// empty. `note` flags vacuous/inconclusive/heuristic verdicts.
struct CheckReport {
  bool passed = false;
  Rational lhs = 0;
  Rational rhs = 0;
  std::string relation = "<=";
  std::string note;
  std::string witness;  // serialized JSON object, empty when no witness

  static CheckReport pass(Rational lhs, Rational rhs, std::string relation = "<=");
  static CheckReport fail(Rational lhs, Rational rhs, std::string relation = "<=",
                          std::string witness = {});

  nlohmann::json to_json() const;
};

}  // namespace hadamono
