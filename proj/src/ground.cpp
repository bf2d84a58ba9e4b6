#include "delsup/ground.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace delsup {

std::vector<Term> herbrand_universe(const Signature& sig, SortId sort, std::size_t depth) {
  // Level by level, so that every term of depth k is built from terms of
  // depth < k of the right sorts.
  std::vector<std::vector<Term>> by_sort(sig.sort_count());
  std::vector<std::unordered_set<Term, TermHash>> seen(sig.sort_count());
  auto add = [&](const Term& t) {
    if (seen[t.sort()].insert(t).second) by_sort[t.sort()].push_back(t);
  };
  for (SymbolId f = 0; f < sig.size(); ++f) {
    if (sig.symbol(f).arity() == 0) add(sig.app(f));
  }
  for (std::size_t level = 1; level <= depth; ++level) {
    std::vector<std::vector<Term>> prev = by_sort;
    for (SymbolId f = 0; f < sig.size(); ++f) {
      const Symbol& s = sig.symbol(f);
      if (s.arity() == 0) continue;
      std::vector<std::size_t> idx(s.arity(), 0);
      bool empty_sort = false;
      for (SortId a : s.arg_sorts) empty_sort = empty_sort || prev[a].empty();
      if (empty_sort) continue;
      for (;;) {
        std::vector<Term> args;
        for (std::size_t k = 0; k < s.arity(); ++k) args.push_back(prev[s.arg_sorts[k]][idx[k]]);
        add(sig.app(f, std::move(args)));
        std::size_t k = 0;
        while (k < s.arity() && ++idx[k] == prev[s.arg_sorts[k]].size()) idx[k++] = 0;
        if (k == s.arity()) break;
      }
    }
  }
  return sort < by_sort.size() ? by_sort[sort] : std::vector<Term>{};
}

std::vector<GroundClosure> groundings(const std::vector<ClausePtr>& clauses, const Signature& sig,
                                      const GroundingOptions& options) {
  std::vector<std::vector<Term>> universe(sig.sort_count());
  for (SortId s = 0; s < sig.sort_count(); ++s) universe[s] = herbrand_universe(sig, s, options.depth);

  // A ground clause reachable from several clauses keeps the oldest one
  // (lowest id) as its preimage.
  std::vector<ClausePtr> by_age = clauses;
  std::stable_sort(by_age.begin(), by_age.end(),
                   [](const ClausePtr& a, const ClausePtr& b) { return a->id() < b->id(); });
  std::unordered_map<std::size_t, std::vector<std::size_t>> seen;
  auto multiset_hash = [](const std::vector<Literal>& lits) {
    std::size_t h = lits.size();
    for (const Literal& l : lits) h += LiteralHash{}(l) * 0x9e3779b97f4a7c15ULL;
    return h;
  };

  std::vector<GroundClosure> out;
  for (const ClausePtr& c : by_age) {
    std::vector<SortId> var_sort(c->var_count(), kIndividualSort);
    for (const Literal& l : c->literals()) {
      for (const Term* side : {&l.lhs, &l.rhs}) {
        for_each_subterm(*side, [&](const Term& t, const Position&) {
          if (t.is_var()) var_sort[t.var_id()] = t.sort();
        });
      }
    }
    bool empty = false;
    for (SortId s : var_sort) empty = empty || universe[s].empty();
    if (empty) continue;
    std::vector<std::size_t> idx(var_sort.size(), 0);
    std::size_t produced = 0;
    for (;;) {
      Substitution theta;
      for (VarId x = 0; x < var_sort.size(); ++x) {
        theta.bind(Term::var(x, var_sort[x]), universe[var_sort[x]][idx[x]]);
      }
      std::vector<Literal> lits = delsup::apply(theta, c->literals());
      std::vector<std::size_t>& bucket = seen[multiset_hash(lits)];
      bool duplicate = false;
      for (std::size_t k : bucket) duplicate = duplicate || same_multiset(out[k].literals, lits);
      if (!duplicate) {
        bucket.push_back(out.size());
        out.push_back(GroundClosure{c, std::move(theta), std::move(lits)});
      }
      if (options.max_per_clause > 0 && ++produced >= options.max_per_clause) break;
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == universe[var_sort[k]].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return out;
}

const char* to_string(GroundRule r) {
  switch (r) {
    case GroundRule::Sup: return "GSup";
    case GroundRule::EqFact: return "GEqFact";
    case GroundRule::EqRes: return "GEqRes";
  }
  return "?";
}

namespace {

const Term* subterm_or_null(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::uint32_t i : p.path) {
    if (cur->is_var() || i == 0 || i > cur->arity()) return nullptr;
    cur = &cur->arg(i - 1);
  }
  return cur;
}

bool greater(const Kbo& kbo, const Term& a, const Term& b) { return kbo.compare(a, b) == Order::Greater; }

}  // namespace

bool ground_sup_holds(const Kbo& kbo, Selection sel, std::span<const Literal> dl,
                      std::span<const Literal> cl, const Substitution& theta, LitSide eq,
                      LitSide target, const Position& p) {
  if (eq.lit >= dl.size() || target.lit >= cl.size()) return false;
  const Literal& e = dl[eq.lit];
  const Literal& l = cl[target.lit];
  if (!e.positive) return false;
  Term t = theta.apply(e.side(eq.side));
  Term t2 = theta.apply(e.other_side(eq.side));
  Term s = theta.apply(l.side(target.side));
  Term s2 = theta.apply(l.other_side(target.side));
  const Term* u = subterm_or_null(s, p);
  if (!u || *u != t) return false;
  if (!greater(kbo, t, t2) || !greater(kbo, s, s2)) return false;
  if (!eligible(kbo, sel, dl, eq.lit, theta, true)) return false;
  if (!eligible(kbo, sel, cl, target.lit, theta, l.positive)) return false;
  std::vector<Literal> dg = delsup::apply(theta, dl);
  std::vector<Literal> cg = delsup::apply(theta, cl);
  return kbo.compare(std::span<const Literal>(cg), std::span<const Literal>(dg)) == Order::Greater;
}

bool ground_eq_fact_holds(const Kbo& kbo, Selection sel, std::span<const Literal> lits,
                          const Substitution& theta, LitSide kept, LitSide other) {
  if (kept.lit >= lits.size() || other.lit >= lits.size() || kept.lit == other.lit) return false;
  const Literal& li = lits[kept.lit];
  const Literal& lj = lits[other.lit];
  if (!li.positive || !lj.positive) return false;
  Term u = theta.apply(li.side(kept.side));
  Term v = theta.apply(li.other_side(kept.side));
  Term u2 = theta.apply(lj.side(other.side));
  Term v2 = theta.apply(lj.other_side(other.side));
  if (u != u2 || !greater(kbo, u, v) || !greater(kbo, u2, v2)) return false;
  return eligible(kbo, sel, lits, kept.lit, theta, false);
}

bool ground_eq_res_holds(const Kbo& kbo, Selection sel, std::span<const Literal> lits,
                         const Substitution& theta, std::uint32_t lit) {
  if (lit >= lits.size() || lits[lit].positive) return false;
  if (theta.apply(lits[lit].lhs) != theta.apply(lits[lit].rhs)) return false;
  return eligible(kbo, sel, lits, lit, theta, false);
}

bool is_valid_ground_instance(const Kbo& kbo, Selection sel, const InferenceRecord& rec,
                              const Substitution& theta) {
  LitSide a{static_cast<std::uint32_t>(rec.lit_a), rec.side_a};
  LitSide b{static_cast<std::uint32_t>(rec.lit_b), rec.side_b};
  switch (rec.rule) {
    case Rule::Sup:
    case Rule::VSup: {
      auto [dl, cl] = rename_apart(*rec.premises.at(0), *rec.premises.at(1));
      return ground_sup_holds(kbo, sel, dl, cl, theta, a, b, rec.path);
    }
    case Rule::EqFact:
    case Rule::VEqFact:
      return ground_eq_fact_holds(kbo, sel, rec.premises.at(0)->literals(), theta, a, b);
    case Rule::Decompose:
    case Rule::Bind:
    case Rule::ReflDel:
      return ground_eq_res_holds(kbo, sel, rec.premises.at(0)->literals(), theta, a.lit);
    default:
      return false;
  }
}

Substitution combined_grounding(const GroundClosure& d, const GroundClosure& c) {
  Substitution theta = d.theta;
  VarId offset = d.clause->var_count();
  for (const auto& [x, t] : c.theta) theta.bind(Term::var(x + offset, t.sort()), t);
  return theta;
}

std::vector<GroundInference> ground_inferences(const Kbo& kbo, Selection sel,
                                               const std::vector<GroundClosure>& closures) {
  std::vector<GroundInference> out;

  // Ground Sup: equations indexed by their larger side.
  struct EqRef {
    std::size_t closure;
    LitSide where;
  };
  std::unordered_map<Term, std::vector<EqRef>, TermHash> equations;
  for (std::size_t k = 0; k < closures.size(); ++k) {
    const std::vector<Literal>& g = closures[k].literals;
    for (std::uint32_t i = 0; i < g.size(); ++i) {
      if (!g[i].positive) continue;
      for (int a = 0; a < 2; ++a) {
        if (greater(kbo, g[i].side(a), g[i].other_side(a))) {
          equations[g[i].side(a)].push_back(EqRef{k, LitSide{i, a}});
        }
      }
    }
  }
  for (std::size_t kc = 0; kc < closures.size(); ++kc) {
    const GroundClosure& c = closures[kc];
    for (std::uint32_t j = 0; j < c.literals.size(); ++j) {
      for (int b = 0; b < 2; ++b) {
        const Term& s = c.literals[j].side(b);
        if (!greater(kbo, s, c.literals[j].other_side(b))) continue;
        for_each_subterm(s, [&](const Term& u, const Position& p) {
          auto it = equations.find(u);
          if (it == equations.end()) return;
          for (const EqRef& e : it->second) {
            const GroundClosure& d = closures[e.closure];
            auto [dl, cl] = rename_apart(*d.clause, *c.clause);
            Substitution theta = combined_grounding(d, c);
            if (!ground_sup_holds(kbo, sel, dl, cl, theta, e.where, LitSide{j, b}, p)) continue;
            GroundInference inf;
            inf.rule = GroundRule::Sup;
            inf.premises = {e.closure, kc};
            inf.a = e.where;
            inf.b = LitSide{j, b};
            inf.path = p;
            for (std::size_t i = 0; i < c.literals.size(); ++i) {
              if (i != j) inf.conclusion.push_back(c.literals[i]);
            }
            for (std::size_t i = 0; i < d.literals.size(); ++i) {
              if (i != e.where.lit) inf.conclusion.push_back(d.literals[i]);
            }
            const Term& t2 = d.literals[e.where.lit].other_side(e.where.side);
            inf.conclusion.push_back(c.literals[j].with_side(b, replace_at(s, p, t2)));
            out.push_back(std::move(inf));
          }
        });
      }
    }
  }

  for (std::size_t k = 0; k < closures.size(); ++k) {
    const GroundClosure& c = closures[k];
    std::span<const Literal> lits = c.clause->literals();
    const std::vector<Literal>& g = c.literals;
    for (std::uint32_t i = 0; i < g.size(); ++i) {
      if (!g[i].positive) {
        if (!ground_eq_res_holds(kbo, sel, lits, c.theta, i)) continue;
        GroundInference inf;
        inf.rule = GroundRule::EqRes;
        inf.premises = {k};
        inf.a = LitSide{i, 0};
        for (std::size_t m = 0; m < g.size(); ++m) {
          if (m != i) inf.conclusion.push_back(g[m]);
        }
        out.push_back(std::move(inf));
        continue;
      }
      for (std::uint32_t j = 0; j < g.size(); ++j) {
        if (j == i || !g[j].positive) continue;
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            LitSide kept{i, a};
            LitSide other{j, b};
            if (!ground_eq_fact_holds(kbo, sel, lits, c.theta, kept, other)) continue;
            GroundInference inf;
            inf.rule = GroundRule::EqFact;
            inf.premises = {k};
            inf.a = kept;
            inf.b = other;
            for (std::size_t m = 0; m < g.size(); ++m) {
              if (m != i && m != j) inf.conclusion.push_back(g[m]);
            }
            inf.conclusion.push_back(Literal::neq(g[i].other_side(a), g[j].other_side(b)));
            inf.conclusion.push_back(Literal::eq(g[i].side(a), g[i].other_side(a)));
            out.push_back(std::move(inf));
          }
        }
      }
    }
  }
  return out;
}

namespace {

bool below_variable(const Term& s, const Position& p) {
  const Term* cur = &s;
  for (std::uint32_t i : p.path) {
    if (cur->is_var()) return true;
    cur = &cur->arg(i - 1);
  }
  return cur->is_var();
}

std::string describe(const GroundInference& g, const std::vector<GroundClosure>& closures,
                     const Signature& sig) {
  std::ostringstream os;
  os << to_string(g.rule) << " on";
  for (std::size_t k : g.premises) {
    os << " [clause " << closures[k].clause->id() << ": "
       << to_string(closures[k].clause->literals(), sig) << " with "
       << to_string(closures[k].theta, sig) << "]";
  }
  os << " conclusion " << to_string(g.conclusion, sig);
  return os.str();
}

}  // namespace

LiftingReport check_lifting(const std::vector<ClausePtr>& clauses, const Signature& sig,
                            const Kbo& kbo, Selection sel, const GroundingOptions& options) {
  LiftingReport report;
  std::vector<GroundClosure> closures = groundings(clauses, sig, options);
  report.closures = closures.size();
  std::vector<GroundInference> ground = ground_inferences(kbo, sel, closures);
  report.ground_inferences = ground.size();
  Calculus calculus(kbo, sel);

  for (const GroundInference& g : ground) {
    std::optional<Inference> lifted;
    Substitution theta;
    if (g.rule == GroundRule::Sup) {
      const GroundClosure& d = closures[g.premises[0]];
      const GroundClosure& c = closures[g.premises[1]];
      if (below_variable((*c.clause)[g.b.lit].side(g.b.side), g.path)) {
        ++report.exempt;
        continue;
      }
      theta = combined_grounding(d, c);
      lifted = calculus.superpose(CalculusMode::Delayed, d.clause, g.a, c.clause, g.b, g.path);
    } else {
      const GroundClosure& c = closures[g.premises[0]];
      theta = c.theta;
      if (g.rule == GroundRule::EqFact) {
        const Term& u = (*c.clause)[g.a.lit].side(g.a.side);
        const Term& u2 = (*c.clause)[g.b.lit].side(g.b.side);
        lifted = (u.is_var() || u2.is_var()) ? calculus.veq_fact(c.clause, g.a, g.b)
                                             : calculus.eq_fact(c.clause, g.a, g.b);
      } else {
        const Literal& l = (*c.clause)[g.a.lit];
        if (l.lhs == l.rhs) {
          lifted = calculus.refl_del(c.clause, g.a.lit);
        } else if (l.lhs.is_var() || l.rhs.is_var()) {
          lifted = calculus.bind(c.clause, g.a.lit);
        } else {
          lifted = calculus.decompose(c.clause, g.a.lit);
        }
      }
    }
    if (!lifted) {
      report.violations.push_back("no lifting inference for " + describe(g, closures, sig));
      continue;
    }
    std::vector<Literal> main = delsup::apply(theta, lifted->without_constraints());
    std::span<const Literal> all(lifted->conclusion);
    bool constraints_trivial = true;
    for (const Literal& l : all.subspan(all.size() - lifted->constraint_count)) {
      constraints_trivial = constraints_trivial && theta.apply(l.lhs) == theta.apply(l.rhs);
    }
    if (!constraints_trivial) {
      report.violations.push_back("constraints not solved by the grounding for " +
                                  describe(g, closures, sig));
    } else if (!same_multiset(main, g.conclusion)) {
      report.violations.push_back(std::string(rule_name(lifted->record.rule)) + " conclusion " +
                                  to_string(main, sig) + " differs from " +
                                  describe(g, closures, sig));
    } else {
      ++report.lifted;
    }
  }
  return report;
}

}  // namespace delsup
