#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dk/operators.hpp"
#include "dk/scalar.hpp"

namespace dk {

struct CheckResult {
  std::string suite;
  std::string property;
  bool ok = true;
  std::size_t cases = 0;
  std::string witness;
};

struct SelfcheckOptions {
  int max_level = 5;
  Field field = Field::rationals();
  std::uint64_t seed = 1;
  /// Corrupts one face matrix before the module validation property runs.
  bool inject_fault = false;
};

/// Every property suite at the given truncation, in a fixed order.
std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& options);

struct EtaOutcome {
  EtaReading reading;
  int splitting_level = 0;
  bool splits = true;
  std::string splitting_witness;
  int multiplicativity_level = 0;
  std::size_t pairs = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

/// Splitting of the inclusion of Ω and multiplicativity on composable pairs of
/// normal-form monomials, for both readings.
std::vector<EtaOutcome> eta_report(const Field& field, int splitting_level = 6, int multiplicativity_level = 4);

std::string to_string(EtaReading r);

}  // namespace dk
