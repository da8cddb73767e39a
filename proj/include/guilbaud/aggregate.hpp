#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "guilbaud/coalition.hpp"
#include "guilbaud/profile.hpp"
#include "guilbaud/system.hpp"

namespace guilbaud {

/// A set of profile ids, bit p.index() set for each member p.
class ProfileSet {
 public:
  constexpr ProfileSet() = default;
  constexpr ProfileSet(std::initializer_list<ProfileId> ids) {
    for (ProfileId p : ids) bits_ |= static_cast<std::uint8_t>(1U << p.index());
  }
  static constexpr ProfileSet from_bits(std::uint8_t bits) {
    ProfileSet s;
    s.bits_ = bits & 0x3F;
    return s;
  }
  /// {p, p+1, p+2}.
  static constexpr ProfileSet window(ProfileId p) { return {p, p + 1, p + 2}; }

  constexpr std::uint8_t bits() const noexcept { return bits_; }
  constexpr bool contains(ProfileId p) const noexcept { return (bits_ >> p.index()) & 1U; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr ProfileSet with(ProfileId p) const noexcept {
    return from_bits(static_cast<std::uint8_t>(bits_ | (1U << p.index())));
  }
  std::vector<ProfileId> ids() const;

  friend constexpr bool operator==(ProfileSet, ProfileSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Profiles p for which ranking p puts x ahead of y.
constexpr ProfileSet supporter_profiles(Candidate x, Candidate y) {
  ProfileSet out;
  for (ProfileId p : kProfiles) {
    if (prefers(p, x, y)) out = out.with(p);
  }
  return out;
}

/// One profile per member of an assembly.
class Assignment {
 public:
  /// Throws std::invalid_argument if the list is empty or longer than 64.
  explicit Assignment(std::vector<ProfileId> profiles);

  static Assignment unanimous(int n, ProfileId p);
  /// Decodes `index` in mixed radix 6, member 0 least significant, digit
  /// d meaning profile d+1. Requires index < 6^n.
  static Assignment from_index(int n, std::uint64_t index);

  Assembly assembly() const noexcept { return Assembly(static_cast<int>(profiles_.size())); }
  int size() const noexcept { return static_cast<int>(profiles_.size()); }
  ProfileId profile(int member) const { return profiles_.at(static_cast<std::size_t>(member)); }
  const std::vector<ProfileId>& profiles() const noexcept { return profiles_; }
  /// Profiles held by at least one member.
  ProfileSet present() const noexcept;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<ProfileId> profiles_;
};

/// The six coalitions K(1)..K(6) of an assignment as raw member masks.
/// This is the working representation of the aggregation loops.
class ProfileCoalitions {
 public:
  ProfileCoalitions() = default;
  explicit ProfileCoalitions(const Assignment& assignment);

  std::uint64_t of(ProfileId p) const noexcept {
    return masks_[static_cast<std::size_t>(p.index())];
  }
  std::uint64_t of(ProfileSet ps) const noexcept {
    std::uint64_t out = 0;
    for (int i = 0; i < 6; ++i) {
      if ((ps.bits() >> i) & 1U) out |= masks_[static_cast<std::size_t>(i)];
    }
    return out;
  }
  ProfileSet present() const noexcept {
    std::uint8_t bits = 0;
    for (int i = 0; i < 6; ++i) {
      if (masks_[static_cast<std::size_t>(i)] != 0) bits |= static_cast<std::uint8_t>(1U << i);
    }
    return ProfileSet::from_bits(bits);
  }

  /// Moves `member` from profile `from` to profile `to`.
  void move(int member, ProfileId from, ProfileId to) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << member;
    masks_[static_cast<std::size_t>(from.index())] &= ~bit;
    masks_[static_cast<std::size_t>(to.index())] |= bit;
  }
  void set(ProfileId p, std::uint64_t mask) noexcept {
    masks_[static_cast<std::size_t>(p.index())] = mask;
  }

 private:
  std::array<std::uint64_t, 6> masks_{};
};

/// K(ps): members whose profile lies in `ps`. Throws std::invalid_argument
/// when `ps` is empty.
Coalition coalition_of(const Assignment& assignment, ProfileSet ps);

/// Members who rank x ahead of y. Throws std::invalid_argument when x == y.
Coalition supporters(const Assignment& assignment, Candidate x, Candidate y);

/// The collective choice between x and y: x when the coalition of x's
/// supporters is efficient, y otherwise.
Candidate pairwise(const VotingSystem& system, const Assignment& assignment, Candidate x,
                   Candidate y);

enum class Cycle : std::uint8_t {
  abca,  ///< a>b>c>a
  acba,  ///< a>c>b>a
};

std::string to_string(Cycle cycle);

/// The collective relation on {a,b,c}: a linear ranking or a cycle.
class Outcome {
 public:
  static constexpr Outcome linear(ProfileId ranking) { return Outcome(ranking); }
  static constexpr Outcome cyclic(Cycle cycle) { return Outcome(cycle); }

  constexpr bool is_linear() const noexcept { return linear_; }
  /// Throws std::logic_error on a cyclic outcome.
  ProfileId ranking() const;
  /// Throws std::logic_error on a linear outcome.
  Cycle cycle() const;

  friend constexpr bool operator==(const Outcome&, const Outcome&) = default;

 private:
  constexpr explicit Outcome(ProfileId ranking) : linear_(true), ranking_(ranking) {}
  constexpr explicit Outcome(Cycle cycle) : linear_(false), ranking_(1), cycle_(cycle) {}

  bool linear_;
  ProfileId ranking_;
  Cycle cycle_ = Cycle::abca;
};

/// "a>b>c" for linear outcomes, "cyclic: a>b>c>a" otherwise.
std::string to_string(const Outcome& outcome);

/// Bits of a tournament on {a,b,c}: which side wins each pair.
struct Tournament {
  bool a_over_b;
  bool a_over_c;
  bool b_over_c;

  constexpr int code() const noexcept {
    return (a_over_b ? 1 : 0) | (a_over_c ? 2 : 0) | (b_over_c ? 4 : 0);
  }
};

/// The eight tournaments indexed by Tournament::code().
const std::array<Outcome, 8>& tournament_outcomes();

/// Collective outcome from the three pairwise decisions.
Outcome collective(const VotingSystem& system, const Assignment& assignment);
Outcome collective(const VotingSystem& system, const ProfileCoalitions& coalitions) noexcept;

/// Whether the collective relation puts x ahead of y. Throws when x == y.
bool collectively_prefers(const Outcome& outcome, Candidate x, Candidate y);

struct ConditionCReport {
  /// Profiles p for which K(p,p+1,p+2) and K(p+1,p+2,p+3) are both efficient.
  ProfileSet witnesses;

  bool holds() const noexcept { return !witnesses.empty(); }
};

ConditionCReport condition_c(const VotingSystem& system, const Assignment& assignment);
ConditionCReport condition_c(const VotingSystem& system,
                             const ProfileCoalitions& coalitions) noexcept;

/// Bit p.index() set iff the window K(p,p+1,p+2) is efficient.
std::uint8_t efficient_windows(const VotingSystem& system,
                               const ProfileCoalitions& coalitions) noexcept;

}  // namespace guilbaud
