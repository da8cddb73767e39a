#include "guilbaud/cli/commands.hpp"

#include <algorithm>

#include "CLI11.hpp"
#include "guilbaud/aggregate.hpp"
#include "guilbaud/cli/documents.hpp"
#include "guilbaud/enumerate.hpp"
#include "guilbaud/restrictions.hpp"
#include "guilbaud/theorem.hpp"

namespace guilbaud::cli {
namespace {

using nlohmann::json;

json members_json(const Coalition& k) { return k.members(); }

json violation_json(const ValidationReport& report) {
  if (report.valid()) return nullptr;
  if (const auto* c1 = std::get_if<C1Violation>(&*report.violation)) {
    return {{"type", "C1"},
            {"coalition", members_json(c1->coalition)},
            {"complement", members_json(c1->coalition.complement())},
            {"both_efficient", c1->both_efficient}};
  }
  const auto& ac = std::get<AntichainViolation>(*report.violation);
  return {{"type", "antichain"},
          {"contained", members_json(ac.contained)},
          {"container", members_json(ac.container)}};
}

std::string coalition_list(const std::vector<Coalition>& coalitions) {
  if (coalitions.empty()) return "(none)";
  std::string out;
  for (const Coalition& k : coalitions) {
    if (!out.empty()) out += ' ';
    out += to_string(k);
  }
  return out;
}

std::string profile_list(ProfileSet ps) {
  std::string out;
  for (ProfileId p : ps.ids()) {
    if (!out.empty()) out += ',';
    out += std::to_string(p.value());
  }
  return out;
}

json profile_json(ProfileSet ps) {
  json out = json::array();
  for (ProfileId p : ps.ids()) out.push_back(p.value());
  return out;
}

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

// Loads and validates a system file. Returns an exit code on failure.
std::optional<int> load_system(const std::filesystem::path& path,
                               std::optional<VotingSystem>& system, std::ostream& err) {
  try {
    system = decode_system(read_json_file(path));
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NotGuilbaudSystem& e) {
    err << "error: " << path.string() << ": " << e.what() << '\n';
    return kDomainFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << path.string() << ": " << e.what() << '\n';
    return kUsageError;
  }
  return std::nullopt;
}

json scan_json(const ScanReport& r) {
  json first = nullptr;
  if (r.first_counterexample) {
    first = {{"system_index", r.first_counterexample->system_index},
             {"assignment_index", r.first_counterexample->at.assignment_index},
             {"check", to_string(r.first_counterexample->at.check)}};
  }
  return {{"n", r.n},
          {"systems", r.systems},
          {"checks", r.checks},
          {"violations", r.violations()},
          {"equivalence_violations", r.equivalence_violations},
          {"witness_ranking_violations", r.witness_ranking_violations},
          {"converse_witness_violations", r.converse_witness_violations},
          {"linear_outcomes", r.linear},
          {"cyclic_outcomes", r.cyclic},
          {"cycle_proof_systems", r.cycle_proof_systems},
          {"first_counterexample", first}};
}

void print_scan_text(std::ostream& out, const ScanReport& r) {
  out << "n=" << r.n << ": " << r.systems << (r.systems == 1 ? " system, " : " systems, ")
      << r.checks << " checks, " << r.violations() << " violations\n"
      << "  equivalence violations: " << r.equivalence_violations << '\n'
      << "  witness-ranking violations: " << r.witness_ranking_violations << '\n'
      << "  converse-witness violations: " << r.converse_witness_violations << '\n'
      << "  linear outcomes: " << r.linear << '\n'
      << "  cyclic outcomes: " << r.cyclic << '\n'
      << "  cycle-proof systems: " << r.cycle_proof_systems << '\n';
  if (r.first_counterexample) {
    const auto& c = *r.first_counterexample;
    out << "  first counterexample: system " << c.system_index << ", assignment "
        << c.at.assignment_index << " (" << to_string(c.at.check) << ")\n";
  }
}

}  // namespace

int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err) {
  std::optional<VotingSystem> system;
  try {
    system = decode_system_unchecked(read_json_file(options.system_file));
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << options.system_file.string() << ": " << e.what() << '\n';
    return kUsageError;
  }
  const ValidationReport report = validate(*system);

  if (options.json) {
    json minimal = json::array();
    for (const Coalition& m : system->minimal_efficient()) minimal.push_back(members_json(m));
    print_json(out, {{"n", system->size()},
                     {"minimal_coalitions", minimal},
                     {"valid", report.valid()},
                     {"violation", violation_json(report)}});
  } else {
    out << "n: " << system->size() << '\n'
        << "minimal efficient coalitions: " << coalition_list(system->minimal_efficient())
        << '\n'
        << "valid: " << (report.valid() ? "yes" : "no") << '\n';
    if (!report.valid()) {
      out << "violation: " << report.describe() << '\n';
      if (const auto* c1 = std::get_if<C1Violation>(&*report.violation)) {
        out << "witness: " << to_string(c1->coalition) << '\n'
            << "complement: " << to_string(c1->coalition.complement()) << '\n';
      }
    }
  }
  return report.valid() ? kSuccess : kDomainFailure;
}

int cmd_decide(const DecideOptions& options, std::ostream& out, std::ostream& err) {
  std::optional<VotingSystem> system;
  if (auto code = load_system(options.system_file, system, err)) return *code;

  std::optional<AssignmentDocument> doc;
  try {
    doc = decode_assignment(read_json_file(options.assignment_file));
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  const Assignment& assignment = doc->assignment;
  if (assignment.size() != system->size()) {
    err << "error: assignment has " << assignment.size() << " members but the system has "
        << system->size() << '\n';
    return kUsageError;
  }

  struct Decision {
    Candidate x, y, winner;
    Coalition support;
    bool efficient;
  };
  std::vector<Decision> decisions;
  const std::pair<Candidate, Candidate> pairs[] = {{Candidate::a, Candidate::b},
                                                   {Candidate::a, Candidate::c},
                                                   {Candidate::b, Candidate::c}};
  for (const auto& [x, y] : pairs) {
    const Coalition support = supporters(assignment, x, y);
    decisions.push_back(
        {x, y, pairwise(*system, assignment, x, y), support, system->is_efficient(support)});
  }
  const Outcome outcome = collective(*system, assignment);
  const ConditionCReport c = condition_c(*system, assignment);
  const bool consistent = c.holds() == outcome.is_linear();

  if (options.json) {
    json pairwise_json = json::array();
    for (const Decision& d : decisions) {
      pairwise_json.push_back({{"x", std::string(1, to_char(d.x))},
                               {"y", std::string(1, to_char(d.y))},
                               {"winner", std::string(1, to_char(d.winner))},
                               {"supporters", members_json(d.support)},
                               {"efficient", d.efficient}});
    }
    json outcome_json = outcome.is_linear()
                            ? json{{"linear", true},
                                   {"ranking", to_string(profile_order(outcome.ranking()))},
                                   {"profile", outcome.ranking().value()}}
                            : json{{"linear", false}, {"cycle", to_string(outcome.cycle())}};
    json windows = json::array();
    for (ProfileId p : kProfiles) {
      const Coalition k = coalition_of(assignment, ProfileSet::window(p));
      windows.push_back({{"start", p.value()},
                         {"profiles", profile_json(ProfileSet::window(p))},
                         {"coalition", members_json(k)},
                         {"efficient", system->is_efficient(k)}});
    }
    json out_doc{{"n", system->size()},
                 {"profiles", encode_assignment(*doc)["profiles"]},
                 {"pairwise", pairwise_json},
                 {"outcome", outcome_json},
                 {"windows", windows},
                 {"condition_c", {{"holds", c.holds()}, {"witnesses", profile_json(c.witnesses)}}},
                 {"consistent", consistent}};
    if (!doc->names.empty()) out_doc["names"] = doc->names;
    print_json(out, out_doc);
  } else {
    out << "n: " << system->size() << '\n' << "profiles:";
    for (int m = 0; m < assignment.size(); ++m) {
      out << ' ' << assignment.profile(m).value();
      if (!doc->names.empty()) out << '(' << doc->names[static_cast<std::size_t>(m)] << ')';
    }
    out << '\n';
    for (const Decision& d : decisions) {
      out << to_char(d.x) << " vs " << to_char(d.y) << ": " << to_char(d.winner) << " (" << to_char(d.x)
          << ">" << to_char(d.y) << " supporters " << to_string(d.support) << ", "
          << (d.efficient ? "efficient" : "not efficient") << ")\n";
    }
    out << "outcome: " << (outcome.is_linear() ? "linear: " : "") << to_string(outcome);
    if (outcome.is_linear()) out << " (profile " << outcome.ranking().value() << ')';
    out << '\n';
    for (ProfileId p : kProfiles) {
      const Coalition k = coalition_of(assignment, ProfileSet::window(p));
      out << "K(" << profile_list(ProfileSet::window(p)) << ") = " << to_string(k) << ' '
          << (system->is_efficient(k) ? "efficient" : "not efficient") << '\n';
    }
    out << "condition C: " << (c.holds() ? "holds" : "fails") << '\n'
        << "witnesses: " << (c.holds() ? profile_list(c.witnesses) : "none") << '\n'
        << "consistency: "
        << (consistent ? "ok (condition C holds iff the outcome is linear)"
                       : "VIOLATED (condition C and linearity disagree)")
        << '\n';
  }
  return consistent ? kSuccess : kDomainFailure;
}

int cmd_scan(const ScanOptions& options, std::ostream& out, std::ostream& err) {
  if (options.max_n < 1 || options.max_n > kMaxEnumerationSize) {
    err << "error: --max-n must be in 1.." << kMaxEnumerationSize << '\n';
    return kUsageError;
  }
  if (options.jobs < 1) {
    err << "error: --jobs must be at least 1\n";
    return kUsageError;
  }
  if (options.sizes.empty()) {
    err << "error: scan needs at least one assembly size\n";
    return kUsageError;
  }
  for (int n : options.sizes) {
    if (n < 1 || n > options.max_n) {
      err << "error: n=" << n << " outside 1.." << options.max_n;
      if (n == kMaxEnumerationSize) err << " (pass --max-n 7 to opt in)";
      err << '\n';
      return kUsageError;
    }
  }

  std::vector<ScanReport> reports;
  for (int n : options.sizes) {
    guilbaud::ScanOptions scan;
    scan.jobs = options.jobs;
    scan.enumeration.allow_seven = options.max_n >= kMaxEnumerationSize;
    reports.push_back(exhaustive_scan(n, scan));
  }

  std::uint64_t violations = 0;
  for (const ScanReport& r : reports) violations += r.violations();
  if (options.json) {
    json scans = json::array();
    for (const ScanReport& r : reports) scans.push_back(scan_json(r));
    print_json(out, {{"scans", scans}, {"violations", violations}});
  } else {
    for (const ScanReport& r : reports) print_scan_text(out, r);
  }
  return violations == 0 ? kSuccess : kDomainFailure;
}

int cmd_census(const CensusOptions& options, std::ostream& out, std::ostream& err) {
  std::optional<VotingSystem> system;
  if (options.system_file && options.builtin) {
    err << "error: give either a system file or --builtin, not both\n";
    return kUsageError;
  }
  if (options.system_file) {
    if (auto code = load_system(*options.system_file, system, err)) return *code;
    if (options.n && *options.n != system->size()) {
      err << "error: --n " << *options.n << " does not match the system's n=" << system->size()
          << '\n';
      return kUsageError;
    }
  } else if (options.builtin) {
    if (!options.n) {
      err << "error: --builtin needs --n\n";
      return kUsageError;
    }
    const int n = *options.n;
    if (n < 1 || n > kMaxScanSize) {
      err << "error: n=" << n << " outside 1.." << kMaxScanSize << '\n';
      return kUsageError;
    }
    if (*options.builtin == "majority") {
      system = majority_with_chair(n, 0);
    } else if (*options.builtin == "dictatorship") {
      system = dictatorship(n, 0);
    } else {
      err << "error: unknown built-in system \"" << *options.builtin
          << "\" (expected majority or dictatorship)\n";
      return kUsageError;
    }
  } else {
    err << "error: census needs a system file or --builtin\n";
    return kUsageError;
  }
  if (system->size() > kMaxScanSize) {
    err << "error: n=" << system->size() << " outside 1.." << kMaxScanSize << '\n';
    return kUsageError;
  }

  const CensusReport r = gap_census(*system);
  const bool sen_ok = !r.sen_applicable || r.sen_implication_holds();
  if (options.json) {
    json sen{{"applicable", r.sen_applicable},
             {"restricted_but_cyclic", r.restricted_but_cyclic}};
    sen["holds"] = r.sen_applicable ? json(r.sen_implication_holds()) : json(nullptr);
    print_json(out, {{"n", r.n},
                     {"assignments", r.assignments},
                     {"value_restricted", r.value_restricted},
                     {"condition_c", r.condition_c},
                     {"linear", r.linear},
                     {"restricted_but_c_fails", r.restricted_but_c_fails},
                     {"c_but_unrestricted", r.c_but_unrestricted},
                     {"sen", sen}});
  } else {
    out << "n=" << r.n << ": " << r.assignments << " assignments\n"
        << "  (i) value-restricted: " << r.value_restricted << '\n'
        << "  (ii) condition C holds: " << r.condition_c << '\n'
        << "  (iii) linear outcome: " << r.linear << '\n'
        << "  (iv) value-restricted but condition C fails: " << r.restricted_but_c_fails << '\n'
        << "  (v) condition C holds but not value-restricted: " << r.c_but_unrestricted << '\n';
    if (r.sen_applicable) {
      out << "  value restriction implies linear (odd pure majority): "
          << (r.sen_implication_holds() ? "holds" : "FAILS") << " (" << r.restricted_but_cyclic
          << " value-restricted cyclic assignments)\n";
    } else {
      out << "  value restriction implies linear: not applicable (not an odd pure majority)\n";
    }
  }
  return sen_ok ? kSuccess : kDomainFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Guilbaud voting systems: validation, aggregation of three-candidate "
               "profiles, and exhaustive checks of the linearity criterion"};
  app.name("guilbaud");
  app.require_subcommand(1);
  app.fallthrough();

  bool json_output = false;
  int seed = 0;
  app.add_flag("--json", json_output, "Emit machine-readable JSON");
  app.add_option("--seed", seed, "Reserved; every operation is deterministic");

  ValidateOptions validate_options;
  auto* validate_cmd = app.add_subcommand("validate", "Check a system document");
  validate_cmd->add_option("system", validate_options.system_file, "System JSON file")
      ->required();

  DecideOptions decide_options;
  auto* decide_cmd =
      app.add_subcommand("decide", "Aggregate one assignment and evaluate condition (C)");
  decide_cmd->add_option("system", decide_options.system_file, "System JSON file")->required();
  decide_cmd->add_option("assignment", decide_options.assignment_file, "Assignment JSON file")
      ->required();

  ScanOptions scan_options;
  auto* scan_cmd =
      app.add_subcommand("scan", "Check the criterion over every system and assignment");
  scan_cmd->add_option("n", scan_options.sizes, "Assembly sizes to scan")->required();
  scan_cmd->add_option("--jobs", scan_options.jobs, "Worker threads");
  scan_cmd->add_option("--max-n", scan_options.max_n, "Largest accepted n (7 to opt in)");

  CensusOptions census_options;
  std::string census_file;
  std::string census_builtin;
  int census_n = 0;
  auto* census_cmd =
      app.add_subcommand("census", "Compare value restriction with condition (C)");
  auto* file_opt = census_cmd->add_option("system", census_file, "System JSON file");
  auto* builtin_opt =
      census_cmd->add_option("--builtin", census_builtin, "majority or dictatorship");
  auto* n_opt = census_cmd->add_option("--n", census_n, "Assembly size for --builtin");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*validate_cmd) {
      validate_options.json = json_output;
      return cmd_validate(validate_options, out, err);
    }
    if (*decide_cmd) {
      decide_options.json = json_output;
      return cmd_decide(decide_options, out, err);
    }
    if (*scan_cmd) {
      scan_options.json = json_output;
      return cmd_scan(scan_options, out, err);
    }
    census_options.json = json_output;
    if (*file_opt) census_options.system_file = census_file;
    if (*builtin_opt) census_options.builtin = census_builtin;
    if (*n_opt) census_options.n = census_n;
    return cmd_census(census_options, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace guilbaud::cli
