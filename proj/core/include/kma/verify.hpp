#pragma once

#include "kma/gcm.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kma {

struct SuiteResult {
  std::string name;
  bool skipped = false;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string detail;  // first failure, or the reason for skipping

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  std::string matrix;
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool all_passed() const;
  /// Fixed-width pass/fail table; byte-identical for equal inputs.
  std::string render() const;
};

/// Runs every invariant suite that applies to the matrix.
VerifyReport run_verify(const CartanData& data, std::uint64_t seed);

}  // namespace kma
