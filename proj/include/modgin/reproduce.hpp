#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modgin/invariants.hpp"

namespace modgin {

struct ReproduceOptions {
  /// Characteristic of the V5 claims (prime, at least 7).
  std::uint32_t p = 7;
  /// Fewer random cases per claim.
  bool fast = false;
  unsigned threads = 1;
};

struct ClaimResult {
  std::string id;
  bool pass = false;
  /// Empty on success; names the first failing case otherwise.
  std::string detail;
  double seconds = 0.0;
};

/// Claim ids in run order.
const std::vector<std::string>& claim_ids();

/// Runs one claim; library errors are reported as a failure with the message.
/// Throws InvalidArgument for an unknown id or an unusable p.
ClaimResult run_claim(const std::string& id, const ReproduceOptions& options);

std::vector<ClaimResult> reproduce_paper(const ReproduceOptions& options);

/// A Borel matrix with C = 0, built from a random one by solving for alpha_23.
SquareMatrix v5_zero_c_matrix(const FieldPtr& field, std::uint64_t seed);

/// Seeded Borel matrices with C != 0, one per seed index (seeds are skipped
/// while C vanishes).
std::vector<SquareMatrix> v5_generic_matrices(const FieldPtr& field, std::uint64_t seed, unsigned count);

}  // namespace modgin
