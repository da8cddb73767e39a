#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "guilbaud/aggregate.hpp"
#include "guilbaud/system.hpp"

namespace guilbaud::cli {

/// Malformed input: unreadable file, JSON syntax error, or a document that
/// does not match its schema. The message carries the position or the
/// JSON pointer of the offending value.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json read_json_file(const std::filesystem::path& path);

/// Decodes a system document without validating the resulting family.
///
///   {"n": 3, "kind": "minimal_coalitions", "coalitions": [[0, 1], [0, 2], [1, 2]]}
///   {"n": 4, "kind": "majority_chair", "chair": 0}
///   {"n": 3, "kind": "dictatorship", "dictator": 1}
///   {"n": 5, "kind": "weighted", "weights": [3, 1, 1, 1, 1], "quota": 4}
VotingSystem decode_system_unchecked(const nlohmann::json& doc);

/// decode_system_unchecked, then throws NotGuilbaudSystem unless valid.
VotingSystem decode_system(const nlohmann::json& doc);

/// Always emits the "minimal_coalitions" kind.
nlohmann::json encode_system(const VotingSystem& system);

struct AssignmentDocument {
  Assignment assignment;
  /// Empty, or one name per member.
  std::vector<std::string> names;
};

///   {"profiles": [1, 3, 5], "names": ["ann", "bob", "cy"]}
AssignmentDocument decode_assignment(const nlohmann::json& doc);

nlohmann::json encode_assignment(const AssignmentDocument& doc);

}  // namespace guilbaud::cli
