#include "guilbaud/theorem.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace guilbaud {
namespace {

void note(std::optional<Counterexample>& first, std::uint64_t index, TheoremCheck check) {
  const Counterexample candidate{index, check};
  if (!first || candidate < *first) first = candidate;
}

}  // namespace

std::string to_string(TheoremCheck check) {
  switch (check) {
    case TheoremCheck::equivalence: return "equivalence";
    case TheoremCheck::witness_ranking: return "witness-ranking";
    case TheoremCheck::converse_witness: return "converse-witness";
  }
  return "unknown";
}

TheoremReport& TheoremReport::operator+=(const TheoremReport& other) {
  assignments += other.assignments;
  linear += other.linear;
  cyclic += other.cyclic;
  condition_c_failures += other.condition_c_failures;
  equivalence_violations += other.equivalence_violations;
  witness_ranking_violations += other.witness_ranking_violations;
  converse_witness_violations += other.converse_witness_violations;
  if (other.first_counterexample &&
      (!first_counterexample || *other.first_counterexample < *first_counterexample)) {
    first_counterexample = other.first_counterexample;
  }
  return *this;
}

TheoremReport verify_theorem_range(const VotingSystem& system, std::uint64_t begin,
                                   std::uint64_t end) {
  const int n = system.size();
  end = std::min(end, assignment_count(n));
  TheoremReport report;
  for_each_assignment(n, begin, end, [&](std::uint64_t index, const ProfileCoalitions& k) {
    ++report.assignments;
    const Outcome outcome = collective(system, k);
    const ConditionCReport c = condition_c(system, k);
    if (outcome.is_linear()) {
      ++report.linear;
    } else {
      ++report.cyclic;
    }
    if (!c.holds()) ++report.condition_c_failures;

    if (c.holds() != outcome.is_linear()) {
      ++report.equivalence_violations;
      note(report.first_counterexample, index, TheoremCheck::equivalence);
    }
    if (!outcome.is_linear()) return;

    const ProfileId r = outcome.ranking();
    bool refined = true;
    for (ProfileId p : kProfiles) {
      if (c.witnesses.contains(p) && r != p + 1 && r != p + 2) refined = false;
    }
    if (!refined) {
      ++report.witness_ranking_violations;
      note(report.first_counterexample, index, TheoremCheck::witness_ranking);
    }
    if (!c.witnesses.contains(r - 1)) {
      ++report.converse_witness_violations;
      note(report.first_counterexample, index, TheoremCheck::converse_witness);
    }
  });
  return report;
}

TheoremReport verify_theorem(const VotingSystem& system) {
  return verify_theorem_range(system, 0, assignment_count(system.size()));
}

ScanReport exhaustive_scan(int n, ScanOptions options) {
  const std::vector<VotingSystem> systems = enumerate_systems(n, options.enumeration);
  const std::uint64_t per_system = assignment_count(n);
  const int jobs = std::max(1, options.jobs);

  std::vector<ScanReport> partials(static_cast<std::size_t>(jobs));
  auto work = [&](int worker) {
    ScanReport& partial = partials[static_cast<std::size_t>(worker)];
    for (std::size_t i = static_cast<std::size_t>(worker); i < systems.size();
         i += static_cast<std::size_t>(jobs)) {
      const TheoremReport r = verify_theorem(systems[i]);
      ++partial.systems;
      partial.checks += per_system;
      partial.linear += r.linear;
      partial.cyclic += r.cyclic;
      partial.equivalence_violations += r.equivalence_violations;
      partial.witness_ranking_violations += r.witness_ranking_violations;
      partial.converse_witness_violations += r.converse_witness_violations;
      if (r.cyclic == 0) ++partial.cycle_proof_systems;
      if (r.first_counterexample) {
        const SystemCounterexample found{i, *r.first_counterexample};
        if (!partial.first_counterexample || found < *partial.first_counterexample) {
          partial.first_counterexample = found;
        }
      }
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }

  ScanReport total;
  total.n = n;
  for (const ScanReport& p : partials) {
    total.systems += p.systems;
    total.checks += p.checks;
    total.linear += p.linear;
    total.cyclic += p.cyclic;
    total.equivalence_violations += p.equivalence_violations;
    total.witness_ranking_violations += p.witness_ranking_violations;
    total.converse_witness_violations += p.converse_witness_violations;
    total.cycle_proof_systems += p.cycle_proof_systems;
    if (p.first_counterexample &&
        (!total.first_counterexample || *p.first_counterexample < *total.first_counterexample)) {
      total.first_counterexample = p.first_counterexample;
    }
  }
  return total;
}

}  // namespace guilbaud
