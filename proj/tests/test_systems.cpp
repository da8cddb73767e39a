#include <random>

#include "doctest.h"
#include "guilbaud/system.hpp"
#include "oracle.hpp"

using namespace guilbaud;

namespace {

// Exhaustive C1 and C2 from the definition, using the library's own
// efficiency lookup.
bool exhaustive_c1(const VotingSystem& system) {
  const Assembly a = system.assembly();
  for (std::uint64_t k = 0; k < oracle::universe(a.size()); ++k) {
    const Coalition coalition(a, k);
    if (system.is_efficient(coalition) == system.is_efficient(coalition.complement())) {
      return false;
    }
  }
  return true;
}

bool exhaustive_monotone(const VotingSystem& system) {
  const Assembly a = system.assembly();
  for (std::uint64_t k = 0; k < oracle::universe(a.size()); ++k) {
    if (!system.is_efficient_bits(k)) continue;
    for (int i = 0; i < a.size(); ++i) {
      if (!system.is_efficient_bits(k | (std::uint64_t{1} << i))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("dictatorship") {
  const VotingSystem d = dictatorship(3, 1);
  const Assembly a(3);
  for (std::uint64_t k = 0; k < 8; ++k) {
    CHECK(d.is_efficient(Coalition(a, k)) == static_cast<bool>(k & 0b010));
  }
  CHECK(d.is_efficient(Coalition::of(a, {1, 2})));
  CHECK(d.minimal_efficient() == std::vector<Coalition>{Coalition::of(a, {1})});
  CHECK(validate(dictatorship(1, 0)).valid());
  CHECK(validate(dictatorship(6, 2)).valid());
  CHECK(exhaustive_c1(dictatorship(6, 2)));
  CHECK_THROWS_AS(dictatorship(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(dictatorship(3, -1), std::invalid_argument);
}

TEST_CASE("full assembly is efficient and the empty coalition is not") {
  for (const VotingSystem& s : {dictatorship(4, 0), majority_with_chair(5, 2),
                                majority_with_chair(6, 5)}) {
    CHECK(s.is_efficient(Coalition::full(s.assembly())));
    CHECK_FALSE(s.is_efficient(Coalition::empty(s.assembly())));
  }
}

TEST_CASE("is_efficient rejects foreign coalitions") {
  CHECK_THROWS_AS(dictatorship(3, 0).is_efficient(Coalition::full(Assembly(4))),
                  std::invalid_argument);
}

TEST_CASE("majority with a chair") {
  const Assembly three(3);
  const VotingSystem m3 = majority_with_chair(3, 0);
  for (std::uint64_t k = 0; k < 8; ++k) {
    CHECK(m3.is_efficient(Coalition(three, k)) == (Coalition(three, k).size() >= 2));
  }
  const Assembly four(4);
  const VotingSystem m4 = majority_with_chair(4, 0);
  CHECK(m4.is_efficient(Coalition::of(four, {0, 1})));
  CHECK_FALSE(m4.is_efficient(Coalition::of(four, {2, 3})));
  CHECK(validate(majority_with_chair(5, 0)).valid());
  CHECK(exhaustive_c1(majority_with_chair(5, 0)));
  CHECK(validate(majority_with_chair(6, 5)).valid());
  CHECK(exhaustive_c1(majority_with_chair(6, 5)));
  CHECK_THROWS_AS(majority_with_chair(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(majority_with_chair(kConstructorLimit + 1, 0), std::invalid_argument);
}

TEST_CASE("constructor outputs satisfy both axioms exhaustively") {
  for (int n = 1; n <= 8; ++n) {
    for (int member = 0; member < n; ++member) {
      CAPTURE(n);
      CAPTURE(member);
      const VotingSystem m = majority_with_chair(n, member);
      CHECK(exhaustive_c1(m));
      CHECK(exhaustive_monotone(m));
      const VotingSystem d = dictatorship(n, member);
      CHECK(exhaustive_c1(d));
      CHECK(exhaustive_monotone(d));
    }
  }
}

TEST_CASE("validate reports violations") {
  const Assembly two(2);
  SUBCASE("empty coalition as the only minimal one") {
    const auto report = validate(VotingSystem::unchecked(two, {Coalition::empty(two)}));
    REQUIRE_FALSE(report.valid());
    const auto& v = std::get<C1Violation>(*report.violation);
    CHECK(v.coalition == Coalition::empty(two));
    CHECK(v.both_efficient);
  }
  SUBCASE("two disjoint singletons") {
    const auto report = validate(VotingSystem::unchecked(
        two, {Coalition::of(two, {0}), Coalition::of(two, {1})}));
    REQUIRE_FALSE(report.valid());
    const auto& v = std::get<C1Violation>(*report.violation);
    CHECK(v.coalition == Coalition::of(two, {0}));
    CHECK(report.describe() == "coalition {0} and its complement {1} are both efficient");
  }
  SUBCASE("no efficient coalitions at all") {
    const auto report = validate(VotingSystem::unchecked(two, {}));
    REQUIRE_FALSE(report.valid());
    CHECK_FALSE(std::get<C1Violation>(*report.violation).both_efficient);
  }
  SUBCASE("non-antichain") {
    const Assembly three(3);
    const auto report = validate(VotingSystem::unchecked(
        three, {Coalition::of(three, {0}), Coalition::of(three, {0, 1})}));
    REQUIRE_FALSE(report.valid());
    const auto& v = std::get<AntichainViolation>(*report.violation);
    CHECK(v.contained == Coalition::of(three, {0}));
    CHECK(v.container == Coalition::of(three, {0, 1}));
  }
  SUBCASE("make throws with the report") {
    try {
      VotingSystem::make(two, {Coalition::of(two, {0}), Coalition::of(two, {1})});
      FAIL("expected NotGuilbaudSystem");
    } catch (const NotGuilbaudSystem& e) {
      CHECK_FALSE(e.report().valid());
    }
  }
}

TEST_CASE("weighted systems") {
  const std::vector<std::int64_t> equal = {1, 1, 1};
  CHECK(weighted(equal, 2) == majority_with_chair(3, 1));

  SUBCASE("tie between member 0 and the rest") {
    const std::vector<std::int64_t> w = {2, 1, 1};
    try {
      weighted(w, 3);
      FAIL("expected NotGuilbaudSystem");
    } catch (const NotGuilbaudSystem& e) {
      const auto& v = std::get<C1Violation>(*e.report().violation);
      CHECK(v.coalition == Coalition::of(Assembly(3), {0}));
      CHECK_FALSE(v.both_efficient);
    }
  }
  SUBCASE("heavy member plus any other") {
    const std::vector<std::int64_t> w = {3, 1, 1, 1, 1};
    const VotingSystem s = weighted(w, 4);
    const Assembly five(5);
    std::vector<Coalition> expected;
    for (int i = 1; i < 5; ++i) expected.push_back(Coalition::of(five, {0, i}));
    expected.push_back(Coalition::of(five, {1, 2, 3, 4}));
    std::sort(expected.begin(), expected.end(),
              [](const Coalition& x, const Coalition& y) { return x.bits() < y.bits(); });
    CHECK(s.minimal_efficient() == expected);
    CHECK(exhaustive_c1(s));
  }
  SUBCASE("odd unit weights equal plain majority") {
    for (int n = 1; n <= 9; n += 2) {
      const std::vector<std::int64_t> ones(static_cast<std::size_t>(n), 1);
      for (int chair = 0; chair < n; ++chair) {
        CHECK(weighted(ones, (n + 1) / 2) == majority_with_chair(n, chair));
      }
    }
  }
  SUBCASE("zero-weight members are dummies") {
    const std::vector<std::int64_t> w = {0, 1, 0};
    CHECK(weighted(w, 1) == dictatorship(3, 1));
  }
  SUBCASE("bad arguments") {
    const std::vector<std::int64_t> zeros = {0, 0};
    const std::vector<std::int64_t> negative = {1, -1};
    CHECK_THROWS_AS(weighted(zeros, 1), std::invalid_argument);
    CHECK_THROWS_AS(weighted(negative, 1), std::invalid_argument);
    CHECK_THROWS_AS(weighted(std::vector<std::int64_t>{1}, 0), NotGuilbaudSystem);
  }
}

TEST_CASE("random valid weighted instances pass the exhaustive check") {
  std::mt19937 rng(11);
  int valid = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(rng() % 7) + 1;
    std::vector<std::int64_t> w;
    std::int64_t total = 0;
    for (int i = 0; i < n; ++i) {
      w.push_back(static_cast<std::int64_t>(rng() % 5));
      total += w.back();
    }
    if (total == 0) continue;
    const std::int64_t quota = static_cast<std::int64_t>(rng() % static_cast<unsigned>(total)) + 1;
    const VotingSystem s = weighted_unchecked(w, quota);
    const bool c1 = oracle::satisfies_c1(n, oracle::family_of(s));
    CHECK(validate(s).valid() == c1);
    if (c1) {
      ++valid;
      CHECK(exhaustive_monotone(s));
    }
  }
  CHECK(valid > 0);
}

TEST_CASE("validation without a table uses the transversal search") {
  const Assembly big(18);
  const Assembly small(16);
  auto family = [](Assembly a, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<Coalition> out;
    for (auto s : sets) out.push_back(Coalition::of(a, s));
    return VotingSystem::unchecked(a, out);
  };
  const auto majority_of_three = {std::initializer_list<int>{0, 1}, {0, 2}, {1, 2}};
  const auto two_of_three = {std::initializer_list<int>{0, 1}, {0, 2}};
  CHECK_FALSE(family(big, majority_of_three).has_table());
  CHECK(validate(family(big, majority_of_three)).valid());
  CHECK(validate(family(small, majority_of_three)).valid());

  const auto big_report = validate(family(big, two_of_three));
  const auto small_report = validate(family(small, two_of_three));
  REQUIRE_FALSE(big_report.valid());
  REQUIRE_FALSE(small_report.valid());
  CHECK(std::get<C1Violation>(*big_report.violation).coalition.members() ==
        std::vector<int>{0});
  CHECK(std::get<C1Violation>(*small_report.violation).coalition.members() ==
        std::vector<int>{0});

  CHECK(validate(dictatorship(64, 63)).valid());
  CHECK(dictatorship(64, 63).is_efficient(Coalition::of(Assembly(64), {63})));
  CHECK_FALSE(validate(VotingSystem::unchecked(Assembly(40), {})).valid());
}

TEST_CASE("pure majority detection") {
  CHECK(is_pure_majority(majority_with_chair(3, 2)));
  CHECK(is_pure_majority(majority_with_chair(7, 0)));
  CHECK_FALSE(is_pure_majority(majority_with_chair(4, 0)));
  CHECK_FALSE(is_pure_majority(dictatorship(3, 0)));
  CHECK(is_pure_majority(dictatorship(1, 0)));
}

TEST_CASE("from_table recovers the antichain") {
  const VotingSystem m = majority_with_chair(6, 2);
  CHECK(VotingSystem::from_table(m.assembly(), m.efficiency_table()) == m);
  CHECK_THROWS_AS(VotingSystem::from_table(Assembly(2), {0b0010}), std::invalid_argument);
}
