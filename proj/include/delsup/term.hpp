/**
 * @file term.hpp
 * Sorted first-order terms, signatures, positions and substitutions.
 *
 * Terms are immutable and shared; copying a Term copies a pointer. Equality
 * is structural (syntactic identity), with a pointer fast path.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace delsup {

using SortId = std::uint32_t;
using SymbolId = std::uint32_t;
using VarId = std::uint32_t;

/// Default sort of untyped individuals.
inline constexpr SortId kIndividualSort = 0;
/// Boolean-like sort that predicate atoms are encoded into (A = top).
inline constexpr SortId kBoolSort = 1;
/// The special constant top : o.
inline constexpr SymbolId kTopSymbol = 0;

/// Raised on ill-sorted construction; always a caller bug.
class SortError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InvalidPosition : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct Symbol {
  std::string name;
  std::vector<SortId> arg_sorts;
  SortId result_sort = kIndividualSort;

  std::size_t arity() const { return arg_sorts.size(); }
};

class Term {
 public:
  Term() = default;

  static Term var(VarId id, SortId sort = kIndividualSort);
  /// Unchecked construction; Signature::app validates arity and sorts.
  static Term app(SymbolId functor, SortId sort, std::vector<Term> args = {});

  bool valid() const { return node_ != nullptr; }
  bool is_var() const { return node_->is_var; }
  VarId var_id() const { return node_->id; }
  SymbolId functor() const { return node_->id; }
  SortId sort() const { return node_->sort; }
  std::span<const Term> args() const { return node_->args; }
  std::size_t arity() const { return node_->args.size(); }
  const Term& arg(std::size_t i) const { return node_->args[i]; }

  bool ground() const { return node_->var_bound == 0; }
  /// Number of symbol and variable occurrences.
  std::uint32_t size() const { return node_->size; }
  /// One past the largest variable id occurring in the term; 0 when ground.
  VarId var_bound() const { return node_->var_bound; }
  std::size_t hash() const { return node_->hash; }

  bool contains_var(VarId x) const;
  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node {
    bool is_var = false;
    std::uint32_t id = 0;
    SortId sort = 0;
    std::uint32_t size = 1;
    VarId var_bound = 0;
    std::size_t hash = 0;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Symbols and sorts of a problem. Sort 0 is the default individual sort,
/// sort 1 the Boolean-like sort, symbol 0 the constant top : o.
class Signature {
 public:
  Signature();

  SortId add_sort(std::string name);
  std::optional<SortId> find_sort(std::string_view name) const;
  const std::string& sort_name(SortId s) const { return sorts_.at(s); }
  std::size_t sort_count() const { return sorts_.size(); }

  /// Registers a symbol. The key is (name, arity, result sort); adding an
  /// existing key returns the existing id.
  SymbolId add_symbol(std::string name, std::vector<SortId> arg_sorts, SortId result_sort);
  std::optional<SymbolId> find(std::string_view name, std::size_t arity) const;
  /// All symbols carrying this name, in registration order.
  std::vector<SymbolId> find_all(std::string_view name) const;
  const Symbol& symbol(SymbolId f) const { return symbols_.at(f); }
  std::size_t size() const { return symbols_.size(); }

  /// Checked application: arity and argument sorts must match.
  Term app(SymbolId f, std::vector<Term> args = {}) const;
  /// Convenience for tests and tools: find-or-add a symbol over the
  /// individual sort and apply it.
  Term fn(std::string_view name, std::vector<Term> args = {});
  Term top() const { return app(kTopSymbol); }

 private:
  std::vector<std::string> sorts_;
  std::vector<Symbol> symbols_;
  std::unordered_multimap<std::string, SymbolId> by_name_;
};

/// A path of 1-based argument indices; the empty path is the root.
struct Position {
  std::vector<std::uint32_t> path;

  bool root() const { return path.empty(); }
  std::size_t depth() const { return path.size(); }
  Position child(std::uint32_t i) const;
  bool is_prefix_of(const Position& other) const;
  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, const Term& u);

/// Variable ids of t, sorted ascending, without duplicates.
std::vector<VarId> vars(const Term& t);

/// Calls fn(subterm, position) for every subterm in pre-order.
void for_each_subterm(const Term& t,
                      const std::function<void(const Term&, const Position&)>& fn);

/// Finite map from variables to terms, applied simultaneously.
class Substitution {
 public:
  using Binding = std::pair<VarId, Term>;

  Substitution() = default;

  /// Binds variable term x to t. Throws SortError when sorts differ or x is
  /// not a variable. A binding x -> x is dropped.
  void bind(const Term& x, Term t);
  const Term* find(VarId x) const;
  bool contains(VarId x) const { return find(x) != nullptr; }
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  auto begin() const { return bindings_.begin(); }
  auto end() const { return bindings_.end(); }

  Term apply(const Term& t) const;
  bool is_idempotent() const;

  /// The substitution that first applies `first`, then `then`:
  /// apply(compose(s, r), t) == apply(r, apply(s, t)).
  static Substitution compose(const Substitution& first, const Substitution& then);

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::vector<Binding> bindings_;  // sorted by variable id
};

inline Term apply(const Substitution& sigma, const Term& t) { return sigma.apply(t); }
inline Substitution compose(const Substitution& first, const Substitution& then) {
  return Substitution::compose(first, then);
}

/// Adds `offset` to every variable id.
Term shift_vars(const Term& t, VarId offset);

std::string to_string(const Term& t, const Signature& sig);
std::string to_string(const Substitution& s, const Signature& sig);

}  // namespace delsup
