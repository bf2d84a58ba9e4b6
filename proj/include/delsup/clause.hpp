/**
 * @file clause.hpp
 * Clauses, derivation records, selection and clause-level utilities.
 */
#pragma once

#include <atomic>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "delsup/literal.hpp"
#include "delsup/ordering.hpp"

namespace delsup {

enum class Rule {
  Input,
  // delayed-unification calculus
  Sup,
  VSup,
  EqFact,
  VEqFact,
  Decompose,
  Bind,
  ReflDel,
  // classical superposition
  StdSup,
  StdEqFact,
  EqRes,
  // bookkeeping
  DuplicateElim,
};

const char* rule_name(Rule r);

class Clause;
using ClausePtr = std::shared_ptr<const Clause>;

/// How a clause was obtained. Positions are interpreted per rule:
///  - Sup, VSup, StdSup: premises {D, C}; `lit_a`/`side_a` locate the
///    equation side in D, `lit_b`/`side_b`/`path` the rewritten subterm in C.
///  - EqFact, VEqFact, StdEqFact: `lit_a`/`side_a` is the kept literal
///    u = v with u on side_a, `lit_b`/`side_b` the factored literal u' = v'.
///  - Decompose, ReflDel, EqRes, DuplicateElim: `lit_a` is the literal.
///  - Bind: `lit_a`, with `side_a` the side holding the bound variable.
struct InferenceRecord {
  Rule rule = Rule::Input;
  /// Applied as a destructive simplification rather than a generating
  /// inference (eligibility is not required).
  bool simplification = false;
  std::vector<ClausePtr> premises;
  Substitution unifier;
  int lit_a = -1;
  int side_a = 0;
  int lit_b = -1;
  int side_b = 0;
  Position path;
  /// Input name for Rule::Input.
  std::string name;
};

/// A multiset of literals with provenance. Variables are renumbered
/// 0..n-1 by first occurrence at construction.
class Clause {
 public:
  using Id = std::uint64_t;

  /// Builds a clause, normalising variable numbering. `id` 0 requests a
  /// fresh id from the process-wide counter.
  static ClausePtr make(std::vector<Literal> literals, InferenceRecord derivation, Id id = 0);
  static ClausePtr input(std::vector<Literal> literals, std::string name = {});

  std::span<const Literal> literals() const { return literals_; }
  const Literal& operator[](std::size_t i) const { return literals_[i]; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  bool ground() const { return var_count_ == 0; }

  Id id() const { return id_; }
  /// Number of distinct variables (ids are 0..var_count-1).
  VarId var_count() const { return var_count_; }
  /// Symbol and variable count over all literal sides.
  std::uint32_t weight() const { return weight_; }
  const InferenceRecord& derivation() const { return derivation_; }

 private:
  Clause() = default;

  std::vector<Literal> literals_;
  VarId var_count_ = 0;
  std::uint32_t weight_ = 0;
  Id id_ = 0;
  InferenceRecord derivation_;
};

/// Renames variables to 0..n-1 in order of first occurrence.
std::vector<Literal> normalize_vars(std::span<const Literal> lits);
std::vector<Literal> shift_vars(std::span<const Literal> lits, VarId offset);
std::vector<Literal> apply(const Substitution& s, std::span<const Literal> lits);

/// Variable-disjoint variants: the first clause keeps its variables, the
/// second is shifted past them.
std::pair<std::vector<Literal>, std::vector<Literal>> rename_apart(const Clause& c1, const Clause& c2);

/// Contains s = s or a complementary pair.
bool is_tautology(std::span<const Literal> lits);
bool is_tautology(const Clause& c);

/// Multiset subsumption: some m maps c into a sub-multiset of d.
bool subsumes(std::span<const Literal> c, std::span<const Literal> d);
bool subsumes(const Clause& c, const Clause& d);

/// Multiset equality up to literal order (and orientation).
bool same_multiset(std::span<const Literal> a, std::span<const Literal> b);

enum class Selection { None, OneNegative, AllNegative };
Selection parse_selection(std::string_view name);
const char* to_string(Selection s);

/// Selected literal positions (always negative literals), ascending.
std::vector<std::uint32_t> select(Selection sel, const Kbo& kbo, std::span<const Literal> lits);

/// True iff literal `index` is selected, or nothing is selected and its
/// instance under sigma is (strictly) maximal in the instantiated clause.
/// Selection is computed on the uninstantiated clause.
bool eligible(const Kbo& kbo, Selection sel, std::span<const Literal> lits, std::size_t index,
              const Substitution& sigma, bool strict);

/// Maximality of lits[index] without any selection.
bool maximal(const Kbo& kbo, std::span<const Literal> lits, std::size_t index, bool strict);

std::string to_string(std::span<const Literal> lits, const Signature& sig);

}  // namespace delsup
