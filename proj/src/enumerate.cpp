#include "guilbaud/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace guilbaud {
namespace {

// Truth tables of at most 64 entries; entry K is bit K.
using Table64 = std::uint64_t;

std::uint64_t low_mask(int entries) {
  return entries == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << entries) - 1;
}

// Maps entry K to entry (~K) of a table over `vars` variables.
Table64 complement_inputs(Table64 table, int vars) {
  const int entries = 1 << vars;
  Table64 out = 0;
  for (int k = 0; k < entries; ++k) {
    if ((table >> k) & 1U) out |= std::uint64_t{1} << (entries - 1 - k);
  }
  return out;
}

// All monotone Boolean functions of `vars` variables (vars <= 5).
std::vector<Table64> monotone_functions(int vars) {
  std::vector<Table64> current = {0, 1};
  for (int v = 1; v <= vars; ++v) {
    const int half = 1 << (v - 1);
    std::vector<Table64> next;
    for (Table64 low : current) {
      for (Table64 high : current) {
        if ((low & ~high) == 0) next.push_back(low | (high << half));
      }
    }
    current = std::move(next);
  }
  return current;
}

// Up-closed families of subsets of `vars` members in which every two
// members intersect.
std::vector<Table64> intersecting_upsets(int vars) {
  std::vector<Table64> out;
  if (vars == 0) {
    for (Table64 g : monotone_functions(0)) {
      if ((g & complement_inputs(g, 0)) == 0) out.push_back(g);
    }
    return out;
  }
  // Split on the last member: g = without | with << half, without <= with.
  const std::vector<Table64> halves = monotone_functions(vars - 1);
  std::vector<Table64> flipped;
  flipped.reserve(halves.size());
  for (Table64 h : halves) flipped.push_back(complement_inputs(h, vars - 1));
  const int half = 1 << (vars - 1);
  for (std::size_t i = 0; i < halves.size(); ++i) {
    const Table64 without = halves[i];
    for (std::size_t j = 0; j < halves.size(); ++j) {
      const Table64 with = halves[j];
      if ((without & ~with) == 0 && (without & flipped[j]) == 0) {
        out.push_back(without | (with << half));
      }
    }
  }
  return out;
}

// Efficiency tables of every system on n members, as (high word, low word)
// pairs, sorted as 128-bit integers. A self-dual monotone family is fixed by
// its restriction g to coalitions avoiding the last member, which must be an
// intersecting up-set; coalitions containing the last member are efficient
// iff the rest of their complement is not in g.
std::vector<std::array<std::uint64_t, 2>> system_tables(int n) {
  const int vars = n - 1;
  const int entries = 1 << vars;
  std::vector<std::array<std::uint64_t, 2>> keys;
  for (Table64 g : intersecting_upsets(vars)) {
    const Table64 upper = ~complement_inputs(g, vars) & low_mask(entries);
    if (n <= 6) {
      keys.push_back({0, g | (upper << entries)});
    } else {
      keys.push_back({upper, g});
    }
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

void require_enumerable(int n, EnumerationOptions options) {
  const int limit = options.allow_seven ? kMaxEnumerationSize : kDefaultEnumerationLimit;
  if (n < 1 || n > limit) {
    std::string message = "enumeration size must be in 1.." + std::to_string(limit) +
                          ", got " + std::to_string(n);
    if (n == kMaxEnumerationSize) message += " (n = 7 requires an explicit opt-in)";
    throw std::invalid_argument(message);
  }
}

}  // namespace

void for_each_system(int n, const std::function<void(const VotingSystem&)>& visit,
                     EnumerationOptions options) {
  require_enumerable(n, options);
  const Assembly assembly(n);
  for (const auto& [high, low] : system_tables(n)) {
    std::vector<std::uint64_t> table = {low};
    if (n == 7) table.push_back(high);
    visit(VotingSystem::from_table(assembly, std::move(table)));
  }
}

std::vector<VotingSystem> enumerate_systems(int n, EnumerationOptions options) {
  std::vector<VotingSystem> out;
  for_each_system(n, [&](const VotingSystem& s) { out.push_back(s); }, options);
  return out;
}

std::size_t count_systems(int n, EnumerationOptions options) {
  require_enumerable(n, options);
  return system_tables(n).size();
}

}  // namespace guilbaud
