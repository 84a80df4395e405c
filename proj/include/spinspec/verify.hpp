#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinspec/dirac.hpp"
#include "spinspec/symmspace.hpp"

namespace spinspec {

struct CheckResult {
  std::string name;
  bool ok = true;
  bool skipped = false;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

struct VerifyOptions {
  std::optional<Rational> spectrum_cutoff;
  std::size_t oracle_max_noncompact = 16;
  std::int64_t branching_dim_cap = kBranchingDimCap;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  /// Observations that are not failures, e.g. several dominance-maximal minima.
  std::vector<std::string> notes;

  bool ok() const;
};

/// Runs the full invariant battery on a spin pair. Throws NotSpin.
VerifyReport verify_pair(const SymmetricPair& pair, const VerifyOptions& options = {});

}  // namespace spinspec
