/**
 * @file tptp.hpp
 * Reader and printer for the CNF fragment of TPTP.
 *
 * Only cnf(...) annotated formulas and include(...) directives are
 * accepted. Predicate atoms p(t) become p(t) = tTop; equations whose sides
 * are predicate atoms (or variables equated with them) live in sort $o.
 * Every other term is of sort $i. Symbols are registered in order of first
 * occurrence, which the occurrence and arity precedences rely on.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "delsup/clause.hpp"
#include "delsup/term.hpp"

namespace delsup {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string file, std::size_t line, std::size_t column);
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string file_;
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed TPTP outside the supported fragment (fof, tff, thf, ...).
class UnsupportedInput : public ParseError {
 public:
  using ParseError::ParseError;
};

struct SourceSpan {
  std::string file;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Diagnostic {
  enum class Level { Warning, Error };
  Level level = Level::Error;
  std::string message;
  SourceSpan span;
};

std::string to_string(const Diagnostic& d);

struct ParseOptions {
  /// Arity or predicate/function clashes throw when set; otherwise they
  /// are reported as diagnostics and the uses become distinct symbols.
  bool strict = true;
  /// Searched in order for include(...) files, before $TPTP and the
  /// including file's directory.
  std::vector<std::string> include_dirs;
};

struct InputClause {
  std::string name;
  std::string role;
  ClausePtr clause;
  SourceSpan span;
};

struct Problem {
  std::string name;
  Signature signature;
  std::vector<InputClause> inputs;
  std::vector<Diagnostic> diagnostics;

  std::vector<ClausePtr> clauses() const;
};

Problem parse_cnf(std::string_view text, const ParseOptions& options = {},
                  std::string_view file = "<input>");
Problem parse_file(const std::string& path, const ParseOptions& options = {});

/// Diagnostics of the problem plus structural checks (e.g. no clauses).
std::vector<Diagnostic> validate(const Problem& problem);

/// Prints the problem back as TPTP cnf(...) lines.
std::string print_cnf(const Problem& problem);
std::string print_clause(const std::string& name, const std::string& role,
                         std::span<const Literal> lits, const Signature& sig);

/// Parses a single term over the individual sort, registering unknown
/// symbols. Variables are looked up in (and added to) `vars`.
Term parse_term(std::string_view text, Signature& sig, std::map<std::string, VarId>& vars);

}  // namespace delsup
