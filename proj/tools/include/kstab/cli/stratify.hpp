#pragma once

#include <string>
#include <vector>

#include "kstab/cli/documents.hpp"
#include "kstab/cli/input.hpp"
#include "kstab/stability.hpp"

namespace kstab::cli {

struct Stratum {
  StabilityValue value;  // M^mu shared by all members
  std::vector<std::string> members;
};

/// Strictly descending in the lexicographic order; semistable (0,0) first
/// when present. Every input lands in exactly one stratum.
struct StratumTable {
  std::vector<Stratum> strata;
};

/// Computes M^mu for each input on `threads` workers, then groups and sorts
/// in one deterministic pass ordered by input name. Any invalid input aborts
/// the whole table with InvalidInput naming the offenders.
StratumTable stratify(const std::vector<InputSpec>& inputs, unsigned threads);

Json stratum_document(const StratumTable& table, int digits);

}  // namespace kstab::cli
