#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "guilbaud/coalition.hpp"

namespace guilbaud {

/// K and its complement are both efficient, or both inefficient.
struct C1Violation {
  Coalition coalition;
  bool both_efficient;
};

/// `contained` is a subset of `container`; both were listed as minimal.
struct AntichainViolation {
  Coalition contained;
  Coalition container;
};

struct ValidationReport {
  std::optional<std::variant<C1Violation, AntichainViolation>> violation;

  bool valid() const noexcept { return !violation.has_value(); }
  /// One-line human readable summary.
  std::string describe() const;
};

/// A family of efficient coalitions, stored as its antichain of minimal
/// elements. Supersets of a minimal coalition are efficient, so
/// monotonicity holds by construction; the exactly-one-of-K-and-its-
/// complement axiom is what validate() checks.
///
/// Families over at most kTableLimit members also carry the full
/// efficiency table (bit K set iff K is efficient), which serves as a
/// constant-time lookup and as the canonical ordering key.
class VotingSystem {
 public:
  static constexpr int kTableLimit = 16;

  /// Stores the coalitions as given (sorted), without checking anything.
  static VotingSystem unchecked(Assembly assembly, std::vector<Coalition> minimal);

  /// Like unchecked(), then throws NotGuilbaudSystem unless validate() passes.
  static VotingSystem make(Assembly assembly, std::vector<Coalition> minimal);

  /// Builds the system whose efficient family is given by a full table
  /// (bit K of the little-endian word array set iff K is efficient).
  /// Requires assembly.size() <= kTableLimit and a monotone table.
  static VotingSystem from_table(Assembly assembly, std::vector<std::uint64_t> table);

  Assembly assembly() const noexcept { return assembly_; }
  int size() const noexcept { return assembly_.size(); }
  const std::vector<Coalition>& minimal_efficient() const noexcept { return minimal_; }

  /// Throws std::invalid_argument if `k` belongs to another assembly.
  bool is_efficient(const Coalition& k) const;

  /// Unchecked lookup on raw member bits.
  bool is_efficient_bits(std::uint64_t bits) const noexcept {
    if (!table_.empty()) return (table_[bits >> 6] >> (bits & 63)) & 1U;
    return scan_minimal(bits);
  }

  bool has_table() const noexcept { return !table_.empty(); }
  /// Empty when size() > kTableLimit.
  const std::vector<std::uint64_t>& efficiency_table() const noexcept { return table_; }

  /// Same assembly and same family.
  friend bool operator==(const VotingSystem& lhs, const VotingSystem& rhs) {
    return lhs.assembly_ == rhs.assembly_ && lhs.minimal_ == rhs.minimal_;
  }

 private:
  VotingSystem(Assembly assembly, std::vector<Coalition> minimal,
               std::vector<std::uint64_t> table)
      : assembly_(assembly), minimal_(std::move(minimal)), table_(std::move(table)) {}

  bool scan_minimal(std::uint64_t bits) const noexcept;

  Assembly assembly_;
  std::vector<Coalition> minimal_;
  std::vector<std::uint64_t> table_;
};

class NotGuilbaudSystem : public std::runtime_error {
 public:
  explicit NotGuilbaudSystem(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Checks the antichain property, then the exactly-one axiom via
/// properness (minimal coalitions pairwise intersect) and strongness (no
/// coalition meets every minimal coalition while containing none).
ValidationReport validate(const VotingSystem& system);

/// Explicit antichains are only materialised for assemblies up to this size.
inline constexpr int kConstructorLimit = 16;

/// Efficient iff the coalition contains member `dictator`.
VotingSystem dictatorship(int n, int dictator);

/// Efficient iff more than half the members, or exactly half including the chair.
VotingSystem majority_with_chair(int n, int chair);

/// Efficient iff the members' total weight reaches `quota`. Throws
/// NotGuilbaudSystem carrying the violation when the game is not one.
VotingSystem weighted(std::span<const std::int64_t> weights, std::int64_t quota);

/// The weighted game's minimal winning coalitions, without validation.
VotingSystem weighted_unchecked(std::span<const std::int64_t> weights, std::int64_t quota);

/// True iff n is odd and the system is plain majority.
bool is_pure_majority(const VotingSystem& system);

}  // namespace guilbaud
