#include "doctest.h"
#include "guilbaud/restrictions.hpp"
#include "oracle.hpp"

using namespace guilbaud;

namespace {

ProfileSet set_of(std::initializer_list<int> ids) {
  ProfileSet out;
  for (int id : ids) out = out.with(ProfileId(id));
  return out;
}

LinearOrder axis(const char* s) {
  return {candidate_from_char(s[0]), candidate_from_char(s[1]), candidate_from_char(s[2])};
}

using Rank = RestrictionClause::Rank;

}  // namespace

TEST_CASE("value restriction") {
  for (ProfileId p : kProfiles) {
    CHECK(value_restricted(Assignment::unanimous(4, p)).value_restricted());
  }
  CHECK_FALSE(value_restriction(set_of({1, 3, 5})).has_value());
  CHECK_FALSE(value_restriction(set_of({2, 4, 6})).has_value());
  const auto clause = value_restriction(set_of({1, 2}));
  REQUIRE(clause.has_value());
  CHECK(*clause == RestrictionClause{Rank::best, Candidate::b});
  CHECK(to_string(*clause) == "NeverBest(b)");
  CHECK(*value_restriction(set_of({1, 4})) == RestrictionClause{Rank::best, Candidate::b});
  CHECK(*value_restriction(set_of({1, 3, 4, 6})) ==
        RestrictionClause{Rank::middle, Candidate::c});
  CHECK(*value_restriction(set_of({1, 2, 3, 6})) ==
        RestrictionClause{Rank::worst, Candidate::a});
  CHECK(*value_restriction(ProfileSet{}) == RestrictionClause{Rank::best, Candidate::a});
}

TEST_CASE("single-peakedness") {
  CHECK(single_peaked_axis(set_of({1, 4})) == axis("abc"));
  CHECK(single_peaked_axis(set_of({2, 5})) == axis("acb"));
  CHECK_FALSE(single_peaked_axis(set_of({1, 3, 5})).has_value());
  CHECK(single_peaked_axis(set_of({6})) == axis("abc"));
  CHECK_FALSE(single_peaked_axis(ProfileSet::from_bits(0x3F)).has_value());
}

TEST_CASE("single-peaked implies value-restricted") {
  for (unsigned bits = 0; bits < 64; ++bits) {
    const auto present = ProfileSet::from_bits(static_cast<std::uint8_t>(bits));
    if (const auto axis = single_peaked_axis(present)) {
      const auto clause = value_restriction(present);
      REQUIRE(clause.has_value());
      // The axis's middle candidate is never worst.
      bool middle_last = false;
      for (ProfileId p : present.ids()) middle_last |= profile_order(p).worst() == axis->middle();
      CHECK_FALSE(middle_last);
    }
  }
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t failures = 0;
    for (std::uint64_t i = 0; i < oracle::pow6(n); ++i) {
      const RestrictionVerdict v = restrictions(Assignment::from_index(n, i));
      failures += v.single_peaked() && !v.value_restricted();
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("value restriction agrees with the rank-position oracle") {
  for (std::uint64_t i = 0; i < oracle::pow6(4); ++i) {
    const Assignment a = Assignment::from_index(4, i);
    CHECK(value_restricted(a).value_restricted() == oracle::value_restricted(oracle::decode(4, i)));
  }
}

TEST_CASE("census on one member") {
  for (const VotingSystem& s : {dictatorship(1, 0)}) {
    const CensusReport r = gap_census(s);
    CHECK(r.assignments == 6);
    CHECK(r.value_restricted == 6);
    CHECK(r.condition_c == 6);
    CHECK(r.linear == 6);
  }
}

TEST_CASE("census for dictatorship on three members") {
  const CensusReport r = gap_census(dictatorship(3, 0));
  CHECK(r.linear == 216);
  CHECK(r.condition_c == 216);
  CHECK_FALSE(r.sen_applicable);
  CHECK(r.value_restricted == 204);
  CHECK(r.c_but_unrestricted == 12);
}

TEST_CASE("census for pure majority agrees with the oracle recount") {
  for (int n : {3, 5}) {
    const VotingSystem m = majority_with_chair(n, 0);
    const oracle::Family family = oracle::family_of(m);
    CensusReport expected;
    for (std::uint64_t i = 0; i < oracle::pow6(n); ++i) {
      const auto profiles = oracle::decode(n, i);
      const bool vr = oracle::value_restricted(profiles);
      const bool c = oracle::condition_c(n, family, profiles);
      const bool linear = oracle::collective(n, family, profiles) != "cycle";
      expected.value_restricted += vr;
      expected.condition_c += c;
      expected.linear += linear;
      expected.restricted_but_c_fails += vr && !c;
      expected.c_but_unrestricted += c && !vr;
    }
    const CensusReport r = gap_census(m);
    CHECK(r.sen_applicable);
    CHECK(r.sen_implication_holds());
    CHECK(r.value_restricted == expected.value_restricted);
    CHECK(r.condition_c == expected.condition_c);
    CHECK(r.linear == expected.linear);
    CHECK(r.restricted_but_c_fails == expected.restricted_but_c_fails);
    CHECK(r.c_but_unrestricted == expected.c_but_unrestricted);
    CHECK(r.restricted_but_c_fails == 0);
  }
}

TEST_CASE("census is invariant under candidate renaming") {
  // Renaming permutes assignments, so every count is preserved; check it
  // per assignment on a system with a chair.
  const VotingSystem s = majority_with_chair(4, 3);
  for (const auto& perm : kCandidatePermutations) {
    for (std::uint64_t i = 0; i < oracle::pow6(4); ++i) {
      const Assignment a = Assignment::from_index(4, i);
      std::vector<ProfileId> moved;
      for (ProfileId p : a.profiles()) moved.push_back(renamed(p, perm));
      const Assignment b(moved);
      CHECK(value_restricted(a).value_restricted() == value_restricted(b).value_restricted());
      CHECK(condition_c(s, a).holds() == condition_c(s, b).holds());
    }
  }
}
