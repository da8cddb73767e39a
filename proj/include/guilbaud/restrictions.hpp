#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "guilbaud/aggregate.hpp"
#include "guilbaud/profile.hpp"
#include "guilbaud/system.hpp"

namespace guilbaud {

/// A value-restriction clause: `candidate` never takes `rank` among the
/// profiles present.
struct RestrictionClause {
  enum class Rank : std::uint8_t { best, middle, worst };

  Rank rank;
  Candidate candidate;

  friend bool operator==(const RestrictionClause&, const RestrictionClause&) = default;
};

/// "NeverBest(b)" etc.
std::string to_string(const RestrictionClause& clause);

struct RestrictionVerdict {
  std::optional<RestrictionClause> value_restriction;
  /// Axis x-y-z written as the linear order x>y>z.
  std::optional<LinearOrder> single_peaked_axis;

  bool value_restricted() const noexcept { return value_restriction.has_value(); }
  bool single_peaked() const noexcept { return single_peaked_axis.has_value(); }
};

/// First clause that holds, in the order NeverBest a,b,c; NeverMiddle a,b,c;
/// NeverWorst a,b,c. An empty set satisfies every clause.
std::optional<RestrictionClause> value_restriction(ProfileSet present);

/// First of the axes a-b-c, a-c-b, b-a-c on which no present profile ranks
/// the axis's middle candidate last.
std::optional<LinearOrder> single_peaked_axis(ProfileSet present);

RestrictionVerdict value_restricted(const Assignment& assignment);
RestrictionVerdict single_peaked(const Assignment& assignment);
/// Both parts.
RestrictionVerdict restrictions(const Assignment& assignment);

struct CensusReport {
  int n = 0;
  std::uint64_t assignments = 0;
  /// (i)
  std::uint64_t value_restricted = 0;
  /// (ii)
  std::uint64_t condition_c = 0;
  /// (iii)
  std::uint64_t linear = 0;
  /// (iv) value-restricted, yet condition (C) fails.
  std::uint64_t restricted_but_c_fails = 0;
  /// (v) condition (C) holds, yet not value-restricted.
  std::uint64_t c_but_unrestricted = 0;
  /// Value-restricted assignments with a cyclic outcome.
  std::uint64_t restricted_but_cyclic = 0;
  /// The majority implication is only claimed for odd pure majority.
  bool sen_applicable = false;

  bool sen_implication_holds() const noexcept { return restricted_but_cyclic == 0; }
};

/// Category counts over all 6^n assignments of the system's assembly.
/// Throws std::invalid_argument when n exceeds kMaxScanSize.
CensusReport gap_census(const VotingSystem& system);

}  // namespace guilbaud
