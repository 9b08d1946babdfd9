#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgs/corr/correspondence.hpp"
#include "tgs/error.hpp"
#include "tgs/sym/plugin.hpp"
#include "tgs/verify/suites.hpp"

namespace tgs::cli {

/// 1-based; columns count characters, not bytes.
struct Location {
  std::size_t line = 1, column = 1;
};

Location locate(std::string_view text, std::size_t offset);

/// Any error raised while reading a script, with its position.
class ScriptError : public Error {
 public:
  ScriptError(std::string kind, const std::string& what, Location loc, std::vector<std::string> expected = {})
      : Error(std::move(kind), what), loc_(loc), expected_(std::move(expected)) {}
  const Location& location() const noexcept { return loc_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  Location loc_;
  std::vector<std::string> expected_;
};

enum class IrreducibilityCheck { On, Off, Auto };

struct ParseOptions {
  IrreducibilityCheck irreducibility = IrreducibilityCheck::Auto;
  /// Under Auto, minimal polynomials of higher degree over characteristic
  /// zero towers are asserted irreducible rather than checked.
  int auto_bound = 8;
};

struct Command {
  enum class Kind { Compose, Transfer, Degree, Validate, Explain, Functoriality, Associativity, Lemmas, Radicial };
  Kind kind;
  /// Correspondence names in the order written.
  std::vector<std::string> corrs;
  GroupPlugin plugin;
  std::vector<MPoly> functions;
  std::optional<std::uint64_t> seed;
  std::optional<SuiteSize> size;
};

struct Statement {
  enum class Kind { Field, Variety, Corr, Plugin, Command };
  Kind kind;
  /// Declared name; empty for commands.
  std::string name;
  Location loc;
  /// Canonical text, ending in ';'.
  std::string text;
  std::optional<Command> command;
};

/// A parsed script.  Declarations are built while parsing, so every
/// reference has been resolved and every correspondence validated.
class Script {
 public:
  const std::vector<Statement>& statements() const { return statements_; }
  /// Provenance notes from declarations, e.g. asserted irreducibility.
  const std::vector<std::string>& flags() const { return flags_; }
  /// Flags recorded before statement i.
  std::vector<std::string> flags_before(std::size_t i) const;
  const Correspondence& corr(const std::string& name) const { return *corrs_.at(name); }
  FieldPtr field(const std::string& name) const { return fields_.at(name); }
  VarietyPtr variety(const std::string& name) const { return varieties_.at(name); }
  /// Canonical text: one statement per line.
  std::string render() const;

 private:
  friend class Parser;
  std::vector<Statement> statements_;
  std::vector<std::string> flags_;
  std::vector<std::size_t> flag_counts_;
  std::map<std::string, FieldPtr> fields_;
  std::map<std::string, VarietyPtr> varieties_;
  std::map<std::string, std::shared_ptr<const Correspondence>> corrs_;
  std::map<std::string, GroupPlugin> plugins_;
};

/// Throws ScriptError (kinds SyntaxError, NameError, TypeError, or the kind
/// of the module error raised by a declaration).
Script parse(std::string_view text, const ParseOptions& opt = {});

}  // namespace tgs::cli
