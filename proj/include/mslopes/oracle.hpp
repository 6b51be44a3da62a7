// Whole-suite cross-checks between independent ways of computing the same
// quantity.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mslopes/system.hpp"

namespace mslopes {

struct OracleOutcome {
  std::string name;
  std::size_t checked = 0;
  std::optional<std::string> counterexample;  // first disagreement
};

/// Edge-sum twist against the integral formula, on every basic and type I system.
OracleOutcome integration_oracle(const std::vector<KnotSpec>& suite);
/// twist(Lambda) = twist(Lambda_dec) - 2(L + V) on every basic system.
OracleOutcome lv_oracle(const std::vector<KnotSpec>& suite);
/// Remainder from the definition against the per-type closed form, on every
/// type I/II/III candidate.
OracleOutcome remainder_oracle(const std::vector<KnotSpec>& suite);

}  // namespace mslopes
