#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "delsup/term.hpp"

namespace delsup {

enum class UnifyFailure { Clash, Occurs };

/// Result of mgu: either an idempotent most general unifier or the reason
/// no unifier exists.
class UnifyOutcome {
 public:
  UnifyOutcome(Substitution unifier) : value_(std::move(unifier)) {}  // NOLINT
  UnifyOutcome(UnifyFailure failure) : value_(failure) {}            // NOLINT

  bool ok() const { return std::holds_alternative<Substitution>(value_); }
  explicit operator bool() const { return ok(); }
  const Substitution& unifier() const { return std::get<Substitution>(value_); }
  UnifyFailure failure() const { return std::get<UnifyFailure>(value_); }

 private:
  std::variant<Substitution, UnifyFailure> value_;
};

/// Robinson unification with occurs check. Throws SortError when the two
/// terms have different sorts.
UnifyOutcome mgu(const Term& s, const Term& t);

/// Simultaneous unification of several pairs.
UnifyOutcome mgu(std::span<const std::pair<Term, Term>> pairs);

/// One-sided matching: a substitution m with apply(m, pattern) == target.
/// Variables of the target are treated as constants.
std::optional<Substitution> match_term(const Term& pattern, const Term& target);

/// Incremental matcher with an undo trail, used by subsumption to extend a
/// matcher literal by literal and backtrack.
class Matcher {
 public:
  /// Extends the bindings so the pattern maps onto the target. On failure
  /// the bindings are left unchanged.
  bool match(const Term& pattern, const Term& target);
  std::size_t mark() const { return bindings_.size(); }
  void undo(std::size_t mark) { bindings_.resize(mark); }
  Substitution substitution() const;

 private:
  bool match_rec(const Term& pattern, const Term& target);
  const Term* lookup(VarId x) const;

  std::vector<std::pair<VarId, Term>> bindings_;
};

}  // namespace delsup
