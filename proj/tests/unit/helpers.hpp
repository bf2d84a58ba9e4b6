// Small builders shared by the unit tests: terms and literals from TPTP
// text over one signature, and variant comparison of literal lists.
#pragma once

#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "delsup/clause.hpp"
#include "delsup/tptp.hpp"

namespace delsup::testing {

/// Terms written in TPTP syntax; uppercase names are variables numbered by
/// first appearance across all calls on the same fixture.
struct Syntax {
  Signature sig;
  std::map<std::string, VarId> vars;

  Term t(const std::string& text) { return parse_term(text, sig, vars); }

  /// "s = t" or "s != t".
  Literal lit(const std::string& text) {
    auto neq = text.find("!=");
    if (neq != std::string::npos) return Literal::neq(t(text.substr(0, neq)), t(text.substr(neq + 2)));
    auto eq = text.find('=');
    REQUIRE(eq != std::string::npos);
    return Literal::eq(t(text.substr(0, eq)), t(text.substr(eq + 1)));
  }

  std::vector<Literal> lits(const std::vector<std::string>& texts) {
    std::vector<Literal> out;
    for (const std::string& s : texts) out.push_back(lit(s));
    return out;
  }

  ClausePtr clause(const std::vector<std::string>& texts) { return Clause::input(lits(texts)); }

  SymbolId sym(const std::string& name, std::size_t arity = 0) {
    auto f = sig.find(name, arity);
    REQUIRE(f.has_value());
    return *f;
  }

  std::string str(std::span<const Literal> ls) const { return to_string(ls, sig); }
};

/// Equal up to variable renaming and literal order (mutual subsumption of
/// equal-size multisets, decided by the brute-force oracle).
inline bool variants(std::span<const Literal> a, std::span<const Literal> b) {
  std::vector<Literal> va(a.begin(), a.end());
  std::vector<Literal> vb(b.begin(), b.end());
  return va.size() == vb.size() && oracle_subsumes(va, vb) && oracle_subsumes(vb, va);
}

inline Problem cnf(const std::string& text) { return parse_cnf(text); }

}  // namespace delsup::testing
