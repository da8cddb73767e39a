#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "guilbaud/system.hpp"

namespace guilbaud {

/// Largest assembly enumerated without opting in.
inline constexpr int kDefaultEnumerationLimit = 6;
/// Hard ceiling; n = 7 yields 1,422,564 systems.
inline constexpr int kMaxEnumerationSize = 7;

struct EnumerationOptions {
  /// Must be set to enumerate n = 7.
  bool allow_seven = false;
};

/// Visits every Guilbaud voting system on n labelled members exactly
/// once, in increasing order of the efficiency table read as an unsigned
/// integer (coalition K contributes bit K). Systems that differ only by a
/// relabelling of members are distinct.
///
/// Throws std::invalid_argument when n is outside 1..6 (1..7 with opt-in).
void for_each_system(int n, const std::function<void(const VotingSystem&)>& visit,
                     EnumerationOptions options = {});

/// Collects for_each_system into a vector.
std::vector<VotingSystem> enumerate_systems(int n, EnumerationOptions options = {});

/// Number of systems for_each_system would visit.
std::size_t count_systems(int n, EnumerationOptions options = {});

}  // namespace guilbaud
