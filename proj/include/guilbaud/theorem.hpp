#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "guilbaud/assignments.hpp"
#include "guilbaud/enumerate.hpp"
#include "guilbaud/system.hpp"

namespace guilbaud {

/// The three claims checked on every assignment.
enum class TheoremCheck : std::uint8_t {
  /// Condition (C) holds iff the collective outcome is linear.
  equivalence,
  /// Every witness p of a linear outcome r has r in {p+1, p+2}.
  witness_ranking,
  /// A linear outcome r always has r-1 among the witnesses.
  converse_witness,
};

std::string to_string(TheoremCheck check);

struct Counterexample {
  std::uint64_t assignment_index;
  TheoremCheck check;

  friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

struct TheoremReport {
  std::uint64_t assignments = 0;
  std::uint64_t linear = 0;
  std::uint64_t cyclic = 0;
  /// Assignments where condition (C) fails.
  std::uint64_t condition_c_failures = 0;
  std::uint64_t equivalence_violations = 0;
  std::uint64_t witness_ranking_violations = 0;
  std::uint64_t converse_witness_violations = 0;
  /// Lowest assignment index with any violation.
  std::optional<Counterexample> first_counterexample;

  std::uint64_t violations() const noexcept {
    return equivalence_violations + witness_ranking_violations + converse_witness_violations;
  }

  /// Sums counts and keeps the earlier counterexample.
  TheoremReport& operator+=(const TheoremReport& other);
};

/// Checks the three claims on assignments [begin, end).
TheoremReport verify_theorem_range(const VotingSystem& system, std::uint64_t begin,
                                   std::uint64_t end);

/// Checks the three claims on all 6^n assignments. Throws
/// std::invalid_argument when n exceeds kMaxScanSize.
TheoremReport verify_theorem(const VotingSystem& system);

struct SystemCounterexample {
  std::uint64_t system_index;
  Counterexample at;

  friend auto operator<=>(const SystemCounterexample&, const SystemCounterexample&) = default;
};

struct ScanReport {
  int n = 0;
  std::uint64_t systems = 0;
  /// systems * 6^n.
  std::uint64_t checks = 0;
  std::uint64_t linear = 0;
  std::uint64_t cyclic = 0;
  std::uint64_t equivalence_violations = 0;
  std::uint64_t witness_ranking_violations = 0;
  std::uint64_t converse_witness_violations = 0;
  /// Systems under which no assignment yields a cycle.
  std::uint64_t cycle_proof_systems = 0;
  std::optional<SystemCounterexample> first_counterexample;

  std::uint64_t violations() const noexcept {
    return equivalence_violations + witness_ranking_violations + converse_witness_violations;
  }
};

struct ScanOptions {
  /// Worker threads; systems are dealt round-robin. Results do not depend on it.
  int jobs = 1;
  EnumerationOptions enumeration;
};

/// verify_theorem over every system from enumerate_systems(n).
ScanReport exhaustive_scan(int n, ScanOptions options = {});

}  // namespace guilbaud
