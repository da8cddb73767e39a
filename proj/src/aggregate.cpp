#include "guilbaud/aggregate.hpp"

#include <stdexcept>

namespace guilbaud {
namespace {

constexpr ProfileSet kAOverB = supporter_profiles(Candidate::a, Candidate::b);
constexpr ProfileSet kAOverC = supporter_profiles(Candidate::a, Candidate::c);
constexpr ProfileSet kBOverC = supporter_profiles(Candidate::b, Candidate::c);

std::array<Outcome, 8> build_tournament_outcomes() {
  std::array<Outcome, 8> out = {
      Outcome::cyclic(Cycle::abca), Outcome::cyclic(Cycle::abca),
      Outcome::cyclic(Cycle::abca), Outcome::cyclic(Cycle::abca),
      Outcome::cyclic(Cycle::abca), Outcome::cyclic(Cycle::abca),
      Outcome::cyclic(Cycle::abca), Outcome::cyclic(Cycle::abca)};
  // a beats b, b beats c, c beats a.
  out[Tournament{true, false, true}.code()] = Outcome::cyclic(Cycle::abca);
  // a beats c, c beats b, b beats a.
  out[Tournament{false, true, false}.code()] = Outcome::cyclic(Cycle::acba);
  for (ProfileId p : kProfiles) {
    const LinearOrder order = profile_order(p);
    const Tournament t{order.prefers(Candidate::a, Candidate::b),
                       order.prefers(Candidate::a, Candidate::c),
                       order.prefers(Candidate::b, Candidate::c)};
    out[static_cast<std::size_t>(t.code())] = Outcome::linear(p);
  }
  return out;
}

}  // namespace

std::vector<ProfileId> ProfileSet::ids() const {
  std::vector<ProfileId> out;
  for (ProfileId p : kProfiles) {
    if (contains(p)) out.push_back(p);
  }
  return out;
}

Assignment::Assignment(std::vector<ProfileId> profiles) : profiles_(std::move(profiles)) {
  if (profiles_.empty() || profiles_.size() > static_cast<std::size_t>(Assembly::kMaxSize)) {
    throw std::invalid_argument("an assignment needs between 1 and 64 members");
  }
}

Assignment Assignment::unanimous(int n, ProfileId p) {
  const Assembly assembly(n);
  return Assignment(std::vector<ProfileId>(static_cast<std::size_t>(assembly.size()), p));
}

Assignment Assignment::from_index(int n, std::uint64_t index) {
  const Assembly assembly(n);
  std::vector<ProfileId> profiles;
  profiles.reserve(static_cast<std::size_t>(n));
  for (int m = 0; m < assembly.size(); ++m) {
    profiles.push_back(ProfileId::from_index(static_cast<int>(index % 6)));
    index /= 6;
  }
  if (index != 0) throw std::invalid_argument("assignment index exceeds 6^n");
  return Assignment(std::move(profiles));
}

ProfileSet Assignment::present() const noexcept {
  ProfileSet out;
  for (ProfileId p : profiles_) out = out.with(p);
  return out;
}

ProfileCoalitions::ProfileCoalitions(const Assignment& assignment) {
  for (int m = 0; m < assignment.size(); ++m) {
    masks_[static_cast<std::size_t>(assignment.profile(m).index())] |= std::uint64_t{1} << m;
  }
}

Coalition coalition_of(const Assignment& assignment, ProfileSet ps) {
  if (ps.empty()) throw std::invalid_argument("coalition_of needs at least one profile");
  return Coalition(assignment.assembly(), ProfileCoalitions(assignment).of(ps));
}

Coalition supporters(const Assignment& assignment, Candidate x, Candidate y) {
  if (x == y) throw std::invalid_argument("reflexive comparison");
  std::uint64_t bits = 0;
  for (int m = 0; m < assignment.size(); ++m) {
    if (prefers(assignment.profile(m), x, y)) bits |= std::uint64_t{1} << m;
  }
  return Coalition(assignment.assembly(), bits);
}

Candidate pairwise(const VotingSystem& system, const Assignment& assignment, Candidate x,
                   Candidate y) {
  if (system.assembly() != assignment.assembly()) {
    throw std::invalid_argument("system and assignment have different assemblies");
  }
  return system.is_efficient(supporters(assignment, x, y)) ? x : y;
}

std::string to_string(Cycle cycle) { return cycle == Cycle::abca ? "a>b>c>a" : "a>c>b>a"; }

ProfileId Outcome::ranking() const {
  if (!linear_) throw std::logic_error("cyclic outcome has no ranking");
  return ranking_;
}

Cycle Outcome::cycle() const {
  if (linear_) throw std::logic_error("linear outcome has no cycle");
  return cycle_;
}

std::string to_string(const Outcome& outcome) {
  if (outcome.is_linear()) return to_string(profile_order(outcome.ranking()));
  return "cyclic: " + to_string(outcome.cycle());
}

const std::array<Outcome, 8>& tournament_outcomes() {
  static const std::array<Outcome, 8> table = build_tournament_outcomes();
  return table;
}

Outcome collective(const VotingSystem& system, const Assignment& assignment) {
  if (system.assembly() != assignment.assembly()) {
    throw std::invalid_argument("system and assignment have different assemblies");
  }
  return collective(system, ProfileCoalitions(assignment));
}

Outcome collective(const VotingSystem& system, const ProfileCoalitions& coalitions) noexcept {
  const Tournament t{system.is_efficient_bits(coalitions.of(kAOverB)),
                     system.is_efficient_bits(coalitions.of(kAOverC)),
                     system.is_efficient_bits(coalitions.of(kBOverC))};
  return tournament_outcomes()[static_cast<std::size_t>(t.code())];
}

bool collectively_prefers(const Outcome& outcome, Candidate x, Candidate y) {
  if (x == y) throw std::invalid_argument("reflexive comparison");
  if (outcome.is_linear()) return profile_order(outcome.ranking()).prefers(x, y);
  // A cycle x0>x1>x2>x0 is listed as three consecutive wins.
  const std::array<Candidate, 3> order =
      outcome.cycle() == Cycle::abca
          ? std::array<Candidate, 3>{Candidate::a, Candidate::b, Candidate::c}
          : std::array<Candidate, 3>{Candidate::a, Candidate::c, Candidate::b};
  for (std::size_t i = 0; i < 3; ++i) {
    if (order[i] == x) return order[(i + 1) % 3] == y;
  }
  return false;
}

std::uint8_t efficient_windows(const VotingSystem& system,
                               const ProfileCoalitions& coalitions) noexcept {
  std::uint8_t windows = 0;
  for (ProfileId p : kProfiles) {
    if (system.is_efficient_bits(coalitions.of(ProfileSet::window(p)))) {
      windows |= static_cast<std::uint8_t>(1U << p.index());
    }
  }
  return windows;
}

ConditionCReport condition_c(const VotingSystem& system, const Assignment& assignment) {
  if (system.assembly() != assignment.assembly()) {
    throw std::invalid_argument("system and assignment have different assemblies");
  }
  return condition_c(system, ProfileCoalitions(assignment));
}

ConditionCReport condition_c(const VotingSystem& system,
                             const ProfileCoalitions& coalitions) noexcept {
  const unsigned windows = efficient_windows(system, coalitions);
  // Window p and window p+1, cyclically.
  const unsigned next = (windows >> 1) | (windows << 5);
  return {ProfileSet::from_bits(static_cast<std::uint8_t>(windows & next & 0x3F))};
}

}  // namespace guilbaud
