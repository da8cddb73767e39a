#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "guilbaud/aggregate.hpp"

namespace guilbaud {

/// Single-system scans stop at 6^9 assignments.
inline constexpr int kMaxScanSize = 9;

/// 6^n. Throws std::invalid_argument when n is outside 1..kMaxScanSize.
inline std::uint64_t assignment_count(int n) {
  if (n < 1 || n > kMaxScanSize) {
    throw std::invalid_argument("assignment scans need 1 <= n <= " +
                                std::to_string(kMaxScanSize) + ", got " + std::to_string(n));
  }
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 6;
  return total;
}

/// Calls visit(index, coalitions) for every assignment index in
/// [begin, end), in mixed-radix base-6 order with member 0 least
/// significant. The coalitions are updated in place between calls.
template <class Visit>
void for_each_assignment(int n, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  int digits[kMaxScanSize] = {};
  std::uint64_t rest = begin;
  ProfileCoalitions coalitions;
  std::uint64_t masks[6] = {};
  for (int m = 0; m < n; ++m) {
    digits[m] = static_cast<int>(rest % 6);
    rest /= 6;
    masks[digits[m]] |= std::uint64_t{1} << m;
  }
  for (int d = 0; d < 6; ++d) coalitions.set(ProfileId::from_index(d), masks[d]);

  for (std::uint64_t index = begin;;) {
    visit(index, static_cast<const ProfileCoalitions&>(coalitions));
    if (++index == end) return;
    for (int m = 0;; ++m) {
      const int from = digits[m];
      const int to = from == 5 ? 0 : from + 1;
      digits[m] = to;
      coalitions.move(m, ProfileId::from_index(from), ProfileId::from_index(to));
      if (to != 0) break;
    }
  }
}

}  // namespace guilbaud
