#include "guilbaud/system.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace guilbaud {
namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::size_t table_words(int n) {
  return n <= 6 ? 1 : std::size_t{1} << (n - 6);
}

bool table_bit(const std::vector<std::uint64_t>& table, std::uint64_t k) {
  return (table[k >> 6] >> (k & 63)) & 1U;
}

// Upward closure of the minimal coalitions, as a packed bit table.
std::vector<std::uint64_t> closure_table(int n, const std::vector<Coalition>& minimal) {
  const std::uint64_t universe = std::uint64_t{1} << n;
  std::vector<std::uint8_t> efficient(universe, 0);
  for (const auto& m : minimal) efficient[m.bits()] = 1;
  for (int i = 0; i < n; ++i) {
    for (std::uint64_t k = 0; k < universe; ++k) {
      if ((k & bit(i)) && efficient[k ^ bit(i)]) efficient[k] = 1;
    }
  }
  std::vector<std::uint64_t> table(table_words(n), 0);
  for (std::uint64_t k = 0; k < universe; ++k) {
    if (efficient[k]) table[k >> 6] |= bit(static_cast<int>(k & 63));
  }
  return table;
}

bool by_bits(const Coalition& lhs, const Coalition& rhs) { return lhs.bits() < rhs.bits(); }

// Depth-first search for a coalition that meets every minimal coalition
// but contains none of them. Such a coalition and its complement are both
// inefficient. `excluded` members may no longer be added.
std::optional<std::uint64_t> find_blocking_loser(const std::vector<std::uint64_t>& minimal,
                                                 std::uint64_t chosen, std::uint64_t excluded) {
  const std::uint64_t* unhit = nullptr;
  for (const auto& m : minimal) {
    if ((m & chosen) == 0) {
      unhit = &m;
      break;
    }
  }
  if (unhit == nullptr) return chosen;

  std::uint64_t candidates = *unhit & ~excluded;
  for (; candidates != 0; candidates &= candidates - 1) {
    const std::uint64_t next = chosen | (candidates & (~candidates + 1));
    const bool wins = std::any_of(minimal.begin(), minimal.end(),
                                  [&](std::uint64_t m) { return (m & ~next) == 0; });
    if (!wins) {
      if (auto found = find_blocking_loser(minimal, next, excluded)) return found;
    }
    excluded |= candidates & (~candidates + 1);
  }
  return std::nullopt;
}

template <class Visit>
void for_each_subset_of_size(int n, int k, Visit&& visit) {
  if (k == 0) {
    visit(std::uint64_t{0});
    return;
  }
  if (k > n) return;
  const std::uint64_t limit = std::uint64_t{1} << n;
  // Gosper's hack.
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit;) {
    visit(s);
    const std::uint64_t low = s & (~s + 1);
    const std::uint64_t ripple = s + low;
    s = (((ripple ^ s) >> 2) / low) | ripple;
  }
}

void require_constructible(int n) {
  if (n < 1 || n > kConstructorLimit) {
    throw std::invalid_argument("assembly size must be in 1.." +
                                std::to_string(kConstructorLimit) + ", got " +
                                std::to_string(n));
  }
}

void require_member(int n, int member, const char* role) {
  if (member < 0 || member >= n) {
    throw std::invalid_argument(std::string(role) + " index " + std::to_string(member) +
                                " out of range for assembly of size " + std::to_string(n));
  }
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / i;
  return result;
}

}  // namespace

std::string ValidationReport::describe() const {
  if (valid()) return "valid";
  if (const auto* c1 = std::get_if<C1Violation>(&*violation)) {
    return "coalition " + to_string(c1->coalition) + " and its complement " +
           to_string(c1->coalition.complement()) + " are both " +
           (c1->both_efficient ? "efficient" : "inefficient");
  }
  const auto& ac = std::get<AntichainViolation>(*violation);
  return "minimal coalition " + to_string(ac.contained) + " is contained in " +
         to_string(ac.container);
}

NotGuilbaudSystem::NotGuilbaudSystem(ValidationReport report)
    : std::runtime_error("not a Guilbaud system: " + report.describe()),
      report_(std::move(report)) {}

VotingSystem VotingSystem::unchecked(Assembly assembly, std::vector<Coalition> minimal) {
  for (const auto& m : minimal) {
    if (m.assembly() != assembly) {
      throw std::invalid_argument("minimal coalition belongs to another assembly");
    }
  }
  std::sort(minimal.begin(), minimal.end(), by_bits);
  std::vector<std::uint64_t> table;
  if (assembly.size() <= kTableLimit) table = closure_table(assembly.size(), minimal);
  return VotingSystem(assembly, std::move(minimal), std::move(table));
}

VotingSystem VotingSystem::make(Assembly assembly, std::vector<Coalition> minimal) {
  VotingSystem system = unchecked(assembly, std::move(minimal));
  ValidationReport report = validate(system);
  if (!report.valid()) throw NotGuilbaudSystem(std::move(report));
  return system;
}

VotingSystem VotingSystem::from_table(Assembly assembly, std::vector<std::uint64_t> table) {
  const int n = assembly.size();
  if (n > kTableLimit) throw std::invalid_argument("assembly too large for a full table");
  if (table.size() != table_words(n)) throw std::invalid_argument("table has wrong size");
  const std::uint64_t universe = std::uint64_t{1} << n;
  if (n < 6 && (table[0] >> universe) != 0) {
    throw std::invalid_argument("table marks coalitions outside the assembly");
  }
  std::vector<Coalition> minimal;
  for (std::uint64_t k = 0; k < universe; ++k) {
    if (!table_bit(table, k)) continue;
    bool is_minimal = true;
    for (std::uint64_t rest = k; rest != 0; rest &= rest - 1) {
      if (table_bit(table, k ^ (rest & (~rest + 1)))) {
        is_minimal = false;
        break;
      }
    }
    for (int i = 0; i < n; ++i) {
      if (!(k & bit(i)) && !table_bit(table, k | bit(i))) {
        throw std::invalid_argument("table is not monotone");
      }
    }
    if (is_minimal) minimal.emplace_back(assembly, k);
  }
  return VotingSystem(assembly, std::move(minimal), std::move(table));
}

bool VotingSystem::scan_minimal(std::uint64_t bits) const noexcept {
  return std::any_of(minimal_.begin(), minimal_.end(),
                     [bits](const Coalition& m) { return (m.bits() & ~bits) == 0; });
}

bool VotingSystem::is_efficient(const Coalition& k) const {
  if (k.assembly() != assembly_) {
    throw std::invalid_argument("coalition belongs to another assembly than the system");
  }
  return is_efficient_bits(k.bits());
}

ValidationReport validate(const VotingSystem& system) {
  const auto& minimal = system.minimal_efficient();

  // Sorted by bits, so a subset always precedes its supersets.
  for (std::size_t j = 0; j < minimal.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if ((minimal[i].bits() & ~minimal[j].bits()) == 0) {
        return {AntichainViolation{minimal[i], minimal[j]}};
      }
    }
  }

  // Properness: two disjoint efficient coalitions make one the complement's subset.
  for (std::size_t j = 0; j < minimal.size(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      if ((minimal[i].bits() & minimal[j].bits()) == 0) {
        return {C1Violation{minimal[i], true}};
      }
    }
  }

  // Strongness.
  const Assembly assembly = system.assembly();
  if (system.has_table()) {
    const std::uint64_t universe = std::uint64_t{1} << assembly.size();
    const std::uint64_t full = assembly.full_mask();
    for (std::uint64_t k = 0; k < universe; ++k) {
      if (!system.is_efficient_bits(k) && !system.is_efficient_bits(~k & full)) {
        return {C1Violation{Coalition(assembly, k), false}};
      }
    }
  } else {
    std::vector<std::uint64_t> bits;
    bits.reserve(minimal.size());
    for (const auto& m : minimal) bits.push_back(m.bits());
    if (auto loser = find_blocking_loser(bits, 0, 0)) {
      return {C1Violation{Coalition(assembly, *loser), false}};
    }
  }
  return {};
}

VotingSystem dictatorship(int n, int dictator) {
  const Assembly assembly(n);
  require_member(n, dictator, "dictator");
  return VotingSystem::make(assembly, {Coalition::of(assembly, {dictator})});
}

VotingSystem majority_with_chair(int n, int chair) {
  require_constructible(n);
  require_member(n, chair, "chair");
  const Assembly assembly(n);
  std::vector<Coalition> minimal;
  if (n % 2 == 1) {
    for_each_subset_of_size(n, (n + 1) / 2,
                            [&](std::uint64_t s) { minimal.emplace_back(assembly, s); });
  } else {
    const std::uint64_t chair_bit = bit(chair);
    for_each_subset_of_size(n, n / 2, [&](std::uint64_t s) {
      if (s & chair_bit) minimal.emplace_back(assembly, s);
    });
    for_each_subset_of_size(n, n / 2 + 1, [&](std::uint64_t s) {
      if (!(s & chair_bit)) minimal.emplace_back(assembly, s);
    });
  }
  return VotingSystem::make(assembly, std::move(minimal));
}

VotingSystem weighted(std::span<const std::int64_t> weights, std::int64_t quota) {
  VotingSystem system = weighted_unchecked(weights, quota);
  ValidationReport report = validate(system);
  if (!report.valid()) throw NotGuilbaudSystem(std::move(report));
  return system;
}

VotingSystem weighted_unchecked(std::span<const std::int64_t> weights, std::int64_t quota) {
  const int n = static_cast<int>(weights.size());
  require_constructible(n);
  if (std::any_of(weights.begin(), weights.end(), [](std::int64_t w) { return w < 0; })) {
    throw std::invalid_argument("weights must be non-negative");
  }
  if (std::none_of(weights.begin(), weights.end(), [](std::int64_t w) { return w > 0; })) {
    throw std::invalid_argument("at least one weight must be positive");
  }
  const Assembly assembly(n);
  const std::uint64_t universe = std::uint64_t{1} << n;
  std::vector<Coalition> minimal;
  for (std::uint64_t k = 0; k < universe; ++k) {
    std::int64_t total = 0;
    for (std::uint64_t rest = k; rest != 0; rest &= rest - 1) {
      total += weights[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    if (total < quota) continue;
    bool is_minimal = true;
    for (std::uint64_t rest = k; rest != 0; rest &= rest - 1) {
      if (total - weights[static_cast<std::size_t>(std::countr_zero(rest))] >= quota) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.emplace_back(assembly, k);
  }
  return VotingSystem::unchecked(assembly, std::move(minimal));
}

bool is_pure_majority(const VotingSystem& system) {
  const int n = system.size();
  if (n % 2 == 0) return false;
  const auto& minimal = system.minimal_efficient();
  const int quorum = (n + 1) / 2;
  if (minimal.size() != binomial(n, quorum)) return false;
  const bool distinct =
      std::adjacent_find(minimal.begin(), minimal.end()) == minimal.end();
  return distinct && std::all_of(minimal.begin(), minimal.end(),
                     [quorum](const Coalition& m) { return m.size() == quorum; });
}

}  // namespace guilbaud
