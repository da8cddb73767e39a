#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace guilbaud::cli {

enum ExitCode : int {
  kSuccess = 0,
  /// Invalid system, or a theorem violation was found.
  kDomainFailure = 1,
  /// Bad arguments, unreadable or malformed input.
  kUsageError = 2,
};

struct ValidateOptions {
  std::filesystem::path system_file;
  bool json = false;
};

struct DecideOptions {
  std::filesystem::path system_file;
  std::filesystem::path assignment_file;
  bool json = false;
};

struct ScanOptions {
  std::vector<int> sizes;
  int jobs = 1;
  /// Largest n accepted; 7 is the opt-in ceiling.
  int max_n = 6;
  bool json = false;
};

struct CensusOptions {
  std::optional<std::filesystem::path> system_file;
  /// "majority" (chair 0 for even n) or "dictatorship" (member 0).
  std::optional<std::string> builtin;
  std::optional<int> n;
  bool json = false;
};

int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err);
int cmd_decide(const DecideOptions& options, std::ostream& out, std::ostream& err);
int cmd_scan(const ScanOptions& options, std::ostream& out, std::ostream& err);
int cmd_census(const CensusOptions& options, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches to a command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace guilbaud::cli
