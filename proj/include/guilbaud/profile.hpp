#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace guilbaud {

enum class Candidate : std::uint8_t { a = 0, b = 1, c = 2 };

inline constexpr std::array<Candidate, 3> kCandidates = {Candidate::a, Candidate::b,
                                                          Candidate::c};

char to_char(Candidate x) noexcept;
/// Throws std::invalid_argument for anything but 'a', 'b' or 'c'.
Candidate candidate_from_char(char ch);

/// One of the six strict rankings of {a,b,c}, labelled 1..6 with the
/// arithmetic of Z/6Z. The representative 6 stands for the residue 0, so
/// successor(6) == 1.
class ProfileId {
 public:
  static constexpr int kCount = 6;

  /// Throws std::invalid_argument unless 1 <= value <= 6.
  explicit constexpr ProfileId(int value) : value_(static_cast<std::uint8_t>(value)) {
    if (value < 1 || value > kCount) {
      throw std::invalid_argument("profile id must be in 1..6, got " +
                                  std::to_string(value));
    }
  }

  constexpr int value() const noexcept { return value_; }
  /// Zero-based position 0..5, used for bit masks and tables.
  constexpr int index() const noexcept { return value_ - 1; }

  static constexpr ProfileId from_index(int index) {
    return ProfileId(((index % kCount) + kCount) % kCount + 1);
  }

  /// Mod-6 addition; `offset` may be negative.
  constexpr ProfileId operator+(int offset) const { return from_index(index() + offset); }
  constexpr ProfileId operator-(int offset) const { return from_index(index() - offset); }
  constexpr ProfileId successor() const { return *this + 1; }
  constexpr ProfileId opposite() const { return *this + 3; }

  friend constexpr bool operator==(ProfileId, ProfileId) = default;
  friend constexpr auto operator<=>(ProfileId, ProfileId) = default;

 private:
  std::uint8_t value_;
};

inline constexpr std::array<ProfileId, 6> kProfiles = {
    ProfileId(1), ProfileId(2), ProfileId(3), ProfileId(4), ProfileId(5), ProfileId(6)};

/// A strict ranking of the three candidates, best first.
class LinearOrder {
 public:
  /// Throws std::invalid_argument unless the three candidates are distinct.
  constexpr LinearOrder(Candidate first, Candidate second, Candidate third)
      : ranks_{first, second, third} {
    if (first == second || second == third || first == third) {
      throw std::invalid_argument("a linear order must list each candidate once");
    }
  }

  constexpr Candidate at(int rank) const { return ranks_.at(static_cast<std::size_t>(rank)); }
  constexpr Candidate best() const noexcept { return ranks_[0]; }
  constexpr Candidate middle() const noexcept { return ranks_[1]; }
  constexpr Candidate worst() const noexcept { return ranks_[2]; }

  /// Rank position 0..2 of `x`.
  constexpr int position(Candidate x) const noexcept {
    return ranks_[0] == x ? 0 : ranks_[1] == x ? 1 : 2;
  }

  constexpr bool prefers(Candidate x, Candidate y) const noexcept {
    return position(x) < position(y);
  }

  constexpr LinearOrder reversed() const { return {ranks_[2], ranks_[1], ranks_[0]}; }

  friend constexpr bool operator==(const LinearOrder&, const LinearOrder&) = default;

 private:
  std::array<Candidate, 3> ranks_;
};

/// "x>y>z" notation.
std::string to_string(const LinearOrder& order);

namespace detail {
inline constexpr std::array<LinearOrder, 6> kProfileTable = {
    LinearOrder(Candidate::a, Candidate::b, Candidate::c),  // 1
    LinearOrder(Candidate::a, Candidate::c, Candidate::b),  // 2
    LinearOrder(Candidate::c, Candidate::a, Candidate::b),  // 3
    LinearOrder(Candidate::c, Candidate::b, Candidate::a),  // 4
    LinearOrder(Candidate::b, Candidate::c, Candidate::a),  // 5
    LinearOrder(Candidate::b, Candidate::a, Candidate::c),  // 6
};
}  // namespace detail

constexpr LinearOrder profile_order(ProfileId p) noexcept {
  return detail::kProfileTable[static_cast<std::size_t>(p.index())];
}

/// Inverse of profile_order.
constexpr ProfileId profile_of(const LinearOrder& order) {
  for (ProfileId p : kProfiles) {
    if (profile_order(p) == order) return p;
  }
  throw std::logic_error("unreachable: every linear order has a profile id");
}

/// True iff x precedes y in ranking p. Throws std::invalid_argument when x == y.
constexpr bool prefers(ProfileId p, Candidate x, Candidate y) {
  if (x == y) throw std::invalid_argument("reflexive comparison");
  return profile_order(p).prefers(x, y);
}

constexpr ProfileId opposite(ProfileId p) { return p.opposite(); }

/// A renaming of candidates: candidate x is renamed to image[x].
class CandidatePermutation {
 public:
  constexpr CandidatePermutation(Candidate image_of_a, Candidate image_of_b,
                                 Candidate image_of_c)
      : image_{image_of_a, image_of_b, image_of_c} {
    if (image_of_a == image_of_b || image_of_b == image_of_c || image_of_a == image_of_c) {
      throw std::invalid_argument("candidate renaming must be a bijection");
    }
  }

  constexpr Candidate operator()(Candidate x) const noexcept {
    return image_[static_cast<std::size_t>(x)];
  }

  static constexpr CandidatePermutation identity() {
    return {Candidate::a, Candidate::b, Candidate::c};
  }

 private:
  std::array<Candidate, 3> image_;
};

/// All six renamings, identity first.
inline constexpr std::array<CandidatePermutation, 6> kCandidatePermutations = {
    CandidatePermutation(Candidate::a, Candidate::b, Candidate::c),
    CandidatePermutation(Candidate::a, Candidate::c, Candidate::b),
    CandidatePermutation(Candidate::b, Candidate::a, Candidate::c),
    CandidatePermutation(Candidate::b, Candidate::c, Candidate::a),
    CandidatePermutation(Candidate::c, Candidate::a, Candidate::b),
    CandidatePermutation(Candidate::c, Candidate::b, Candidate::a),
};

constexpr LinearOrder renamed(const LinearOrder& order, const CandidatePermutation& perm) {
  return {perm(order.at(0)), perm(order.at(1)), perm(order.at(2))};
}

/// The profile id that ranking p becomes after renaming its candidates.
constexpr ProfileId renamed(ProfileId p, const CandidatePermutation& perm) {
  return profile_of(renamed(profile_order(p), perm));
}

}  // namespace guilbaud
