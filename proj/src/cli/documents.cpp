#include "guilbaud/cli/documents.hpp"

#include <fstream>
#include <sstream>

namespace guilbaud::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw DocumentError(where + ": " + what);
}

const json& field(const json& doc, const std::string& key) {
  if (!doc.is_object()) fail("/", "expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) fail("/" + key, "missing field");
  return *it;
}

std::int64_t integer(const json& value, const std::string& where) {
  if (!value.is_number_integer()) fail(where, "expected an integer");
  return value.get<std::int64_t>();
}

int small_integer(const json& value, const std::string& where, std::int64_t lo,
                  std::int64_t hi) {
  const std::int64_t v = integer(value, where);
  if (v < lo || v > hi) {
    fail(where, "value " + std::to_string(v) + " outside " + std::to_string(lo) + ".." +
                    std::to_string(hi));
  }
  return static_cast<int>(v);
}

const json& array(const json& value, const std::string& where) {
  if (!value.is_array()) fail(where, "expected an array");
  return value;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DocumentError(path.string() + ": " + e.what());
  }
}

VotingSystem decode_system_unchecked(const json& doc) {
  const int n = small_integer(field(doc, "n"), "/n", 1, Assembly::kMaxSize);
  const json& kind_value = field(doc, "kind");
  if (!kind_value.is_string()) fail("/kind", "expected a string");
  const std::string kind = kind_value.get<std::string>();
  const Assembly assembly(n);

  if (kind == "minimal_coalitions") {
    const json& list = array(field(doc, "coalitions"), "/coalitions");
    std::vector<Coalition> minimal;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "/coalitions/" + std::to_string(i);
      const json& members = array(list[i], where);
      std::vector<int> indices;
      for (std::size_t j = 0; j < members.size(); ++j) {
        indices.push_back(
            small_integer(members[j], where + "/" + std::to_string(j), 0, n - 1));
      }
      minimal.push_back(Coalition::of(assembly, indices));
    }
    return VotingSystem::unchecked(assembly, std::move(minimal));
  }
  if (kind == "majority_chair") {
    if (n > kConstructorLimit) fail("/n", "majority_chair supports n <= 16");
    return majority_with_chair(n, small_integer(field(doc, "chair"), "/chair", 0, n - 1));
  }
  if (kind == "dictatorship") {
    return dictatorship(n, small_integer(field(doc, "dictator"), "/dictator", 0, n - 1));
  }
  if (kind == "weighted") {
    if (n > kConstructorLimit) fail("/n", "weighted supports n <= 16");
    const json& list = array(field(doc, "weights"), "/weights");
    if (list.size() != static_cast<std::size_t>(n)) {
      fail("/weights", "expected " + std::to_string(n) + " weights, got " +
                           std::to_string(list.size()));
    }
    std::vector<std::int64_t> weights;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "/weights/" + std::to_string(i);
      const std::int64_t w = integer(list[i], where);
      if (w < 0) fail(where, "weights must be non-negative");
      weights.push_back(w);
    }
    const std::int64_t quota = integer(field(doc, "quota"), "/quota");
    try {
      return weighted_unchecked(weights, quota);
    } catch (const std::invalid_argument& e) {
      fail("/weights", e.what());
    }
  }
  fail("/kind", "unknown kind \"" + kind +
                    "\" (expected minimal_coalitions, majority_chair, dictatorship or weighted)");
}

VotingSystem decode_system(const json& doc) {
  VotingSystem system = decode_system_unchecked(doc);
  ValidationReport report = validate(system);
  if (!report.valid()) throw NotGuilbaudSystem(std::move(report));
  return system;
}

json encode_system(const VotingSystem& system) {
  json coalitions = json::array();
  for (const Coalition& m : system.minimal_efficient()) coalitions.push_back(m.members());
  return json{{"n", system.size()}, {"kind", "minimal_coalitions"}, {"coalitions", coalitions}};
}

AssignmentDocument decode_assignment(const json& doc) {
  const json& list = array(field(doc, "profiles"), "/profiles");
  if (list.empty() || list.size() > static_cast<std::size_t>(Assembly::kMaxSize)) {
    fail("/profiles", "expected between 1 and 64 profiles");
  }
  std::vector<ProfileId> profiles;
  for (std::size_t i = 0; i < list.size(); ++i) {
    profiles.emplace_back(small_integer(list[i], "/profiles/" + std::to_string(i), 1, 6));
  }
  std::vector<std::string> names;
  if (doc.contains("names")) {
    const json& name_list = array(doc["names"], "/names");
    if (name_list.size() != list.size()) {
      fail("/names", "expected one name per profile");
    }
    for (std::size_t i = 0; i < name_list.size(); ++i) {
      if (!name_list[i].is_string()) fail("/names/" + std::to_string(i), "expected a string");
      names.push_back(name_list[i].get<std::string>());
    }
  }
  return {Assignment(std::move(profiles)), std::move(names)};
}

json encode_assignment(const AssignmentDocument& doc) {
  json profiles = json::array();
  for (ProfileId p : doc.assignment.profiles()) profiles.push_back(p.value());
  json out{{"profiles", profiles}};
  if (!doc.names.empty()) out["names"] = doc.names;
  return out;
}

}  // namespace guilbaud::cli
