#include "guilbaud/restrictions.hpp"

#include <array>

#include "guilbaud/assignments.hpp"

namespace guilbaud {
namespace {

constexpr std::array<RestrictionClause::Rank, 3> kRanks = {
    RestrictionClause::Rank::best, RestrictionClause::Rank::middle,
    RestrictionClause::Rank::worst};

constexpr std::array<LinearOrder, 3> kAxes = {
    LinearOrder(Candidate::a, Candidate::b, Candidate::c),
    LinearOrder(Candidate::a, Candidate::c, Candidate::b),
    LinearOrder(Candidate::b, Candidate::a, Candidate::c)};

struct PresentTables {
  std::array<std::optional<RestrictionClause>, 64> clause;
  std::array<std::optional<LinearOrder>, 64> axis;
};

const PresentTables& present_tables() {
  static const PresentTables tables = [] {
    PresentTables t;
    for (unsigned bits = 0; bits < 64; ++bits) {
      const auto present = ProfileSet::from_bits(static_cast<std::uint8_t>(bits));
      t.clause[bits] = value_restriction(present);
      t.axis[bits] = single_peaked_axis(present);
    }
    return t;
  }();
  return tables;
}

}  // namespace

std::string to_string(const RestrictionClause& clause) {
  const char* prefix = clause.rank == RestrictionClause::Rank::best     ? "NeverBest("
                       : clause.rank == RestrictionClause::Rank::middle ? "NeverMiddle("
                                                                        : "NeverWorst(";
  return std::string(prefix) + to_char(clause.candidate) + ")";
}

std::optional<RestrictionClause> value_restriction(ProfileSet present) {
  for (std::size_t rank = 0; rank < kRanks.size(); ++rank) {
    for (Candidate x : kCandidates) {
      bool never = true;
      for (ProfileId p : kProfiles) {
        if (present.contains(p) && profile_order(p).at(static_cast<int>(rank)) == x) {
          never = false;
        }
      }
      if (never) return RestrictionClause{kRanks[rank], x};
    }
  }
  return std::nullopt;
}

std::optional<LinearOrder> single_peaked_axis(ProfileSet present) {
  for (const LinearOrder& axis : kAxes) {
    bool peaked = true;
    for (ProfileId p : kProfiles) {
      if (present.contains(p) && profile_order(p).worst() == axis.middle()) peaked = false;
    }
    if (peaked) return axis;
  }
  return std::nullopt;
}

RestrictionVerdict value_restricted(const Assignment& assignment) {
  return {value_restriction(assignment.present()), std::nullopt};
}

RestrictionVerdict single_peaked(const Assignment& assignment) {
  return {std::nullopt, single_peaked_axis(assignment.present())};
}

RestrictionVerdict restrictions(const Assignment& assignment) {
  const ProfileSet present = assignment.present();
  return {value_restriction(present), single_peaked_axis(present)};
}

CensusReport gap_census(const VotingSystem& system) {
  const int n = system.size();
  const std::uint64_t total = assignment_count(n);
  const PresentTables& tables = present_tables();

  CensusReport report;
  report.n = n;
  report.sen_applicable = is_pure_majority(system);
  for_each_assignment(n, 0, total, [&](std::uint64_t, const ProfileCoalitions& k) {
    ++report.assignments;
    const bool restricted = tables.clause[k.present().bits()].has_value();
    const bool c = condition_c(system, k).holds();
    const bool linear = collective(system, k).is_linear();
    report.value_restricted += restricted;
    report.condition_c += c;
    report.linear += linear;
    report.restricted_but_c_fails += restricted && !c;
    report.c_but_unrestricted += c && !restricted;
    report.restricted_but_cyclic += restricted && !linear;
  });
  return report;
}

}  // namespace guilbaud
