#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgs/cli/script.hpp"

namespace tgs::cli {

enum class Status { Pass, Fail, Unverified };

const char* status_name(Status s);

struct Result {
  std::string label;
  Status status = Status::Pass;
  std::optional<std::string> value;
};

struct CommandReport {
  /// Canonical command text without the final ';'.
  std::string command;
  Location loc;
  std::vector<Result> results;
  std::vector<std::string> flags;
  bool failed() const;
};

struct Report {
  std::vector<CommandReport> commands;
  bool failed() const;
};

struct ExecOptions {
  /// Used by `verify lemmas` when the script gives no seed.
  std::uint64_t seed = 0;
  /// Sym-power cross-check threshold for transfers.
  std::size_t max_degree = 6;
};

/// Runs the commands in order.  Module errors become a failing result that
/// names the error and the statement location.
Report execute(const Script& script, const ExecOptions& opt = {});

/// One object for a single command, otherwise an array; ends in a newline.
std::string to_json(const Report& r);
std::string to_text(const Report& r);
std::string error_json(const ScriptError& e);
/// "where:line:column: Kind: message", plus the expected tokens if any.
std::string error_text(const ScriptError& e, const std::string& where);

}  // namespace tgs::cli
