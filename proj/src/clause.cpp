#include "delsup/clause.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "delsup/unify.hpp"

namespace delsup {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Input: return "input";
    case Rule::Sup: return "sup";
    case Rule::VSup: return "vsup";
    case Rule::EqFact: return "eqfact";
    case Rule::VEqFact: return "veqfact";
    case Rule::Decompose: return "decompose";
    case Rule::Bind: return "bind";
    case Rule::ReflDel: return "refldel";
    case Rule::StdSup: return "superposition";
    case Rule::StdEqFact: return "equality_factoring";
    case Rule::EqRes: return "equality_resolution";
    case Rule::DuplicateElim: return "duplicate_literal_removal";
  }
  return "?";
}

namespace {

std::atomic<Clause::Id> next_clause_id{1};

void collect_first_occurrence(const Term& t, std::vector<std::pair<VarId, SortId>>& order) {
  if (t.ground()) return;
  if (t.is_var()) {
    for (const auto& [v, s] : order) {
      if (v == t.var_id()) return;
    }
    order.emplace_back(t.var_id(), t.sort());
    return;
  }
  for (const Term& a : t.args()) collect_first_occurrence(a, order);
}

}  // namespace

std::vector<Literal> normalize_vars(std::span<const Literal> lits) {
  std::vector<std::pair<VarId, SortId>> order;
  for (const Literal& l : lits) {
    collect_first_occurrence(l.lhs, order);
    collect_first_occurrence(l.rhs, order);
  }
  bool identity = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i].first != i) identity = false;
  }
  if (identity) return {lits.begin(), lits.end()};
  Substitution rename;
  for (std::size_t i = 0; i < order.size(); ++i) {
    rename.bind(Term::var(order[i].first, order[i].second),
                Term::var(static_cast<VarId>(i), order[i].second));
  }
  return delsup::apply(rename, lits);
}

std::vector<Literal> shift_vars(std::span<const Literal> lits, VarId offset) {
  std::vector<Literal> out;
  out.reserve(lits.size());
  for (const Literal& l : lits) {
    out.push_back(Literal{l.positive, shift_vars(l.lhs, offset), shift_vars(l.rhs, offset)});
  }
  return out;
}

std::vector<Literal> apply(const Substitution& s, std::span<const Literal> lits) {
  std::vector<Literal> out;
  out.reserve(lits.size());
  for (const Literal& l : lits) out.push_back(l.map(s));
  return out;
}

ClausePtr Clause::make(std::vector<Literal> literals, InferenceRecord derivation, Id id) {
  auto c = std::shared_ptr<Clause>(new Clause());
  c->literals_ = normalize_vars(literals);
  VarId bound = 0;
  std::uint32_t w = 0;
  for (const Literal& l : c->literals_) {
    bound = std::max(bound, l.var_bound());
    w += l.size();
  }
  c->var_count_ = bound;
  c->weight_ = w;
  c->id_ = id ? id : next_clause_id.fetch_add(1);
  c->derivation_ = std::move(derivation);
  return c;
}

ClausePtr Clause::input(std::vector<Literal> literals, std::string name) {
  InferenceRecord rec;
  rec.rule = Rule::Input;
  rec.name = std::move(name);
  return make(std::move(literals), std::move(rec));
}

std::pair<std::vector<Literal>, std::vector<Literal>> rename_apart(const Clause& c1, const Clause& c2) {
  std::vector<Literal> a(c1.literals().begin(), c1.literals().end());
  return {std::move(a), shift_vars(c2.literals(), c1.var_count())};
}

bool is_tautology(std::span<const Literal> lits) {
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (lits[i].positive && lits[i].trivial()) return true;
    for (std::size_t j = i + 1; j < lits.size(); ++j) {
      if (lits[i].positive != lits[j].positive && lits[i] == lits[j].complement()) return true;
    }
  }
  return false;
}

bool is_tautology(const Clause& c) { return is_tautology(c.literals()); }

namespace {

bool match_literal(Matcher& m, const Literal& p, const Literal& t, int orientation) {
  if (p.positive != t.positive) return false;
  std::size_t mark = m.mark();
  const Term& tl = orientation == 0 ? t.lhs : t.rhs;
  const Term& tr = orientation == 0 ? t.rhs : t.lhs;
  if (p.lhs.sort() != tl.sort()) return false;
  if (m.match(p.lhs, tl) && m.match(p.rhs, tr)) return true;
  m.undo(mark);
  return false;
}

bool head_compatible(const Literal& p, const Literal& t) {
  if (p.positive != t.positive) return false;
  auto compat = [](const Term& a, const Term& b) {
    return a.is_var() || (!b.is_var() && a.functor() == b.functor());
  };
  return (compat(p.lhs, t.lhs) && compat(p.rhs, t.rhs)) ||
         (compat(p.lhs, t.rhs) && compat(p.rhs, t.lhs));
}

bool subsume_rec(std::span<const Literal> c, std::span<const Literal> d, std::size_t i,
                 std::vector<char>& used, Matcher& m) {
  if (i == c.size()) return true;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (used[j] || !head_compatible(c[i], d[j])) continue;
    for (int o = 0; o < 2; ++o) {
      std::size_t mark = m.mark();
      if (!match_literal(m, c[i], d[j], o)) continue;
      used[j] = 1;
      if (subsume_rec(c, d, i + 1, used, m)) return true;
      used[j] = 0;
      m.undo(mark);
    }
  }
  return false;
}

}  // namespace

bool subsumes(std::span<const Literal> c, std::span<const Literal> d) {
  if (c.size() > d.size()) return false;
  std::size_t cp = 0;
  std::size_t dp = 0;
  for (const Literal& l : c) cp += l.positive;
  for (const Literal& l : d) dp += l.positive;
  if (cp > dp || c.size() - cp > d.size() - dp) return false;
  // Most constrained pattern literals first.
  std::vector<Literal> order(c.begin(), c.end());
  std::stable_sort(order.begin(), order.end(),
                   [](const Literal& a, const Literal& b) { return a.size() > b.size(); });
  std::vector<char> used(d.size(), 0);
  Matcher m;
  return subsume_rec(order, d, 0, used, m);
}

bool subsumes(const Clause& c, const Clause& d) { return subsumes(c.literals(), d.literals()); }

bool same_multiset(std::span<const Literal> a, std::span<const Literal> b) {
  if (a.size() != b.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (const Literal& l : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && b[j] == l) {
        used[j] = 1;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Selection parse_selection(std::string_view name) {
  if (name == "none") return Selection::None;
  if (name == "one-negative" || name == "one_negative") return Selection::OneNegative;
  if (name == "all-negative" || name == "all_negative") return Selection::AllNegative;
  throw std::invalid_argument("unknown selection strategy: " + std::string(name));
}

const char* to_string(Selection s) {
  switch (s) {
    case Selection::None: return "none";
    case Selection::OneNegative: return "one-negative";
    case Selection::AllNegative: return "all-negative";
  }
  return "?";
}

std::vector<std::uint32_t> select(Selection sel, const Kbo& kbo, std::span<const Literal> lits) {
  std::vector<std::uint32_t> out;
  switch (sel) {
    case Selection::None:
      break;
    case Selection::AllNegative:
      for (std::uint32_t i = 0; i < lits.size(); ++i) {
        if (!lits[i].positive) out.push_back(i);
      }
      break;
    case Selection::OneNegative: {
      int best = -1;
      for (std::uint32_t i = 0; i < lits.size(); ++i) {
        if (lits[i].positive) continue;
        if (best < 0 || kbo.compare(lits[i], lits[best]) == Order::Less) best = static_cast<int>(i);
      }
      if (best >= 0) out.push_back(static_cast<std::uint32_t>(best));
      break;
    }
  }
  return out;
}

bool maximal(const Kbo& kbo, std::span<const Literal> lits, std::size_t index, bool strict) {
  for (std::size_t j = 0; j < lits.size(); ++j) {
    if (j == index) continue;
    Order o = kbo.compare(lits[j], lits[index]);
    if (o == Order::Greater) return false;
    if (strict && o == Order::Equal) return false;
  }
  return true;
}

bool eligible(const Kbo& kbo, Selection sel, std::span<const Literal> lits, std::size_t index,
              const Substitution& sigma, bool strict) {
  if (index >= lits.size()) throw std::out_of_range("literal index out of range");
  std::vector<std::uint32_t> selected = select(sel, kbo, lits);
  if (!selected.empty()) {
    return std::find(selected.begin(), selected.end(), index) != selected.end();
  }
  if (sigma.empty()) return maximal(kbo, lits, index, strict);
  std::vector<Literal> inst = delsup::apply(sigma, lits);
  return maximal(kbo, inst, index, strict);
}

std::string to_string(std::span<const Literal> lits, const Signature& sig) {
  if (lits.empty()) return "$false";
  std::ostringstream os;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i) os << " | ";
    os << to_string(lits[i], sig);
  }
  return os.str();
}

std::string to_string(const Literal& l, const Signature& sig) {
  const Term* atom = nullptr;
  if (!l.rhs.is_var() && l.rhs.functor() == kTopSymbol && !(l.lhs.is_var()) &&
      l.lhs.functor() != kTopSymbol) {
    atom = &l.lhs;
  } else if (!l.lhs.is_var() && l.lhs.functor() == kTopSymbol && !l.rhs.is_var() &&
             l.rhs.functor() != kTopSymbol) {
    atom = &l.rhs;
  }
  if (atom) return (l.positive ? "" : "~") + to_string(*atom, sig);
  return to_string(l.lhs, sig) + (l.positive ? " = " : " != ") + to_string(l.rhs, sig);
}

}  // namespace delsup
