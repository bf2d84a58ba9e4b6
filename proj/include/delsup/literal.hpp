#pragma once

#include <algorithm>
#include <string>

#include "delsup/term.hpp"

namespace delsup {

/// Positive or negative equation. Stored with sides as written; equality
/// ignores orientation.
struct Literal {
  bool positive = true;
  Term lhs;
  Term rhs;

  static Literal eq(Term l, Term r) { return Literal{true, std::move(l), std::move(r)}; }
  static Literal neq(Term l, Term r) { return Literal{false, std::move(l), std::move(r)}; }

  const Term& side(int i) const { return i == 0 ? lhs : rhs; }
  const Term& other_side(int i) const { return i == 0 ? rhs : lhs; }
  /// Side i replaced by u, the other side kept in place.
  Literal with_side(int i, Term u) const {
    return i == 0 ? Literal{positive, std::move(u), rhs} : Literal{positive, lhs, std::move(u)};
  }
  /// s = s or s != s.
  bool trivial() const { return lhs == rhs; }
  bool ground() const { return lhs.ground() && rhs.ground(); }
  VarId var_bound() const { return std::max(lhs.var_bound(), rhs.var_bound()); }
  std::uint32_t size() const { return lhs.size() + rhs.size(); }
  bool is_predicate() const { return rhs.is_var() ? false : rhs.functor() == kTopSymbol; }

  Literal complement() const { return Literal{!positive, lhs, rhs}; }
  Literal map(const Substitution& s) const { return Literal{positive, s.apply(lhs), s.apply(rhs)}; }

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.positive == b.positive &&
           ((a.lhs == b.lhs && a.rhs == b.rhs) || (a.lhs == b.rhs && a.rhs == b.lhs));
  }
  friend bool operator!=(const Literal& a, const Literal& b) { return !(a == b); }
};

struct LiteralHash {
  std::size_t operator()(const Literal& l) const {
    std::size_t a = l.lhs.hash();
    std::size_t b = l.rhs.hash();
    return (a ^ b) * 31 + (a + b) + (l.positive ? 1 : 0);
  }
};

/// TPTP rendering: `s = t`, `s != t`, and `p(..)` / `~p(..)` for top-encoded atoms.
std::string to_string(const Literal& l, const Signature& sig);

}  // namespace delsup
