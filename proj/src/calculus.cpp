#include "delsup/calculus.hpp"

#include <stdexcept>
#include <string>

#include "delsup/unify.hpp"

namespace delsup {

CalculusMode parse_mode(std::string_view name) {
  if (name == "standard") return CalculusMode::Standard;
  if (name == "delayed") return CalculusMode::Delayed;
  if (name == "delayed-fp" || name == "delayed_fp") return CalculusMode::DelayedFp;
  if (name == "delayed-eager" || name == "delayed_eager") return CalculusMode::DelayedEager;
  throw std::invalid_argument("unknown calculus: " + std::string(name));
}

const char* to_string(CalculusMode m) {
  switch (m) {
    case CalculusMode::Standard: return "standard";
    case CalculusMode::Delayed: return "delayed";
    case CalculusMode::DelayedFp: return "delayed-fp";
    case CalculusMode::DelayedEager: return "delayed-eager";
  }
  return "?";
}

namespace {

void append_except(std::vector<Literal>& out, std::span<const Literal> lits, std::size_t skip1,
                   std::size_t skip2 = static_cast<std::size_t>(-1)) {
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i != skip1 && i != skip2) out.push_back(lits[i]);
  }
}

/// Argument-wise pairs t_i != s_i of two applications of the same symbol.
void append_constraints(std::vector<Literal>& out, const Term& t, const Term& s) {
  for (std::size_t k = 0; k < t.arity(); ++k) out.push_back(Literal::neq(t.arg(k), s.arg(k)));
}

const Term* subterm_or_null(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::uint32_t i : p.path) {
    if (cur->is_var() || i == 0 || i > cur->arity()) return nullptr;
    cur = &cur->arg(i - 1);
  }
  return cur;
}

InferenceRecord binary_record(Rule rule, const ClausePtr& d, LitSide eq, const ClausePtr& c,
                              LitSide target, const Position& p, Substitution sigma) {
  InferenceRecord r;
  r.rule = rule;
  r.premises = {d, c};
  r.unifier = std::move(sigma);
  r.lit_a = static_cast<int>(eq.lit);
  r.side_a = eq.side;
  r.lit_b = static_cast<int>(target.lit);
  r.side_b = target.side;
  r.path = p;
  return r;
}

InferenceRecord unary_record(Rule rule, const ClausePtr& c, int lit, int side, Substitution sigma) {
  InferenceRecord r;
  r.rule = rule;
  r.premises = {c};
  r.unifier = std::move(sigma);
  r.lit_a = lit;
  r.side_a = side;
  return r;
}

}  // namespace

std::optional<Inference> Calculus::sup(const ClausePtr& d, LitSide eq, const ClausePtr& c,
                                       LitSide target, const Position& p) const {
  if (eq.lit >= d->size() || target.lit >= c->size()) return std::nullopt;
  auto [dl, cl] = rename_apart(*d, *c);
  const Literal& eql = dl[eq.lit];
  if (!eql.positive) return std::nullopt;
  const Term& t = eql.side(eq.side);
  const Term& t2 = eql.other_side(eq.side);
  if (t.is_var()) return std::nullopt;
  const Literal& tl = cl[target.lit];
  const Term& s = tl.side(target.side);
  const Term& s2 = tl.other_side(target.side);
  const Term* u = subterm_or_null(s, p);
  if (!u || u->is_var() || u->functor() != t.functor()) return std::nullopt;

  if (!not_leq(kbo_.compare(t, t2))) return std::nullopt;
  if (!not_leq(kbo_.compare(s, s2))) return std::nullopt;
  if (!eligible_in(dl, eq.lit, {}, true)) return std::nullopt;
  if (!eligible_in(cl, target.lit, {}, tl.positive)) return std::nullopt;
  if (!not_leq(kbo_.compare(std::span<const Literal>(cl), std::span<const Literal>(dl)))) {
    return std::nullopt;
  }

  Inference inf;
  append_except(inf.conclusion, cl, target.lit);
  append_except(inf.conclusion, dl, eq.lit);
  inf.conclusion.push_back(tl.with_side(target.side, replace_at(s, p, t2)));
  append_constraints(inf.conclusion, t, *u);
  inf.constraint_count = t.arity();
  inf.record = binary_record(Rule::Sup, d, eq, c, target, p, {});
  return inf;
}

std::optional<Inference> Calculus::vsup(const ClausePtr& d, LitSide eq, const ClausePtr& c,
                                        LitSide target, const Position& p) const {
  if (eq.lit >= d->size() || target.lit >= c->size()) return std::nullopt;
  auto [dl, cl] = rename_apart(*d, *c);
  const Literal& eql = dl[eq.lit];
  if (!eql.positive) return std::nullopt;
  const Term& x = eql.side(eq.side);
  if (!x.is_var()) return std::nullopt;
  const Literal& tl = cl[target.lit];
  const Term& s = tl.side(target.side);
  const Term* u = subterm_or_null(s, p);
  if (!u || u->is_var() || u->sort() != x.sort() || u->contains_var(x.var_id())) {
    return std::nullopt;
  }
  Substitution sigma;
  sigma.bind(x, *u);

  Term t2 = sigma.apply(eql.other_side(eq.side));
  if (!not_leq(kbo_.compare(*u, t2))) return std::nullopt;
  Term ss = sigma.apply(s);
  Term ss2 = sigma.apply(tl.other_side(target.side));
  if (!not_leq(kbo_.compare(ss, ss2))) return std::nullopt;
  if (!eligible_in(dl, eq.lit, sigma, true)) return std::nullopt;
  if (!eligible_in(cl, target.lit, sigma, tl.positive)) return std::nullopt;
  std::vector<Literal> dls = delsup::apply(sigma, dl);
  std::vector<Literal> cls = delsup::apply(sigma, cl);
  if (!not_leq(kbo_.compare(std::span<const Literal>(cls), std::span<const Literal>(dls)))) {
    return std::nullopt;
  }

  Inference inf;
  append_except(inf.conclusion, cls, target.lit);
  append_except(inf.conclusion, dls, eq.lit);
  inf.conclusion.push_back(cls[target.lit].with_side(target.side, replace_at(ss, p, t2)));
  inf.record = binary_record(Rule::VSup, d, eq, c, target, p, sigma);
  return inf;
}

std::optional<Inference> Calculus::std_sup(const ClausePtr& d, LitSide eq, const ClausePtr& c,
                                           LitSide target, const Position& p) const {
  if (eq.lit >= d->size() || target.lit >= c->size()) return std::nullopt;
  auto [dl, cl] = rename_apart(*d, *c);
  const Literal& eql = dl[eq.lit];
  if (!eql.positive) return std::nullopt;
  const Term& t = eql.side(eq.side);
  const Literal& tl = cl[target.lit];
  const Term& s = tl.side(target.side);
  const Term* u = subterm_or_null(s, p);
  if (!u || u->is_var() || u->sort() != t.sort()) return std::nullopt;
  if (!t.is_var() && t.functor() != u->functor()) return std::nullopt;
  UnifyOutcome uo = mgu(t, *u);
  if (!uo) return std::nullopt;
  const Substitution& sigma = uo.unifier();

  Term ts = sigma.apply(t);
  Term t2 = sigma.apply(eql.other_side(eq.side));
  if (!not_leq(kbo_.compare(ts, t2))) return std::nullopt;
  Term ss = sigma.apply(s);
  Term ss2 = sigma.apply(tl.other_side(target.side));
  if (!not_leq(kbo_.compare(ss, ss2))) return std::nullopt;
  if (!eligible_in(dl, eq.lit, sigma, true)) return std::nullopt;
  if (!eligible_in(cl, target.lit, sigma, tl.positive)) return std::nullopt;
  std::vector<Literal> dls = delsup::apply(sigma, dl);
  std::vector<Literal> cls = delsup::apply(sigma, cl);
  if (!not_leq(kbo_.compare(std::span<const Literal>(cls), std::span<const Literal>(dls)))) {
    return std::nullopt;
  }

  Inference inf;
  append_except(inf.conclusion, cls, target.lit);
  append_except(inf.conclusion, dls, eq.lit);
  inf.conclusion.push_back(cls[target.lit].with_side(target.side, replace_at(ss, p, t2)));
  inf.record = binary_record(Rule::StdSup, d, eq, c, target, p, sigma);
  return inf;
}

std::optional<Inference> Calculus::superpose(CalculusMode mode, const ClausePtr& d, LitSide eq,
                                             const ClausePtr& c, LitSide target,
                                             const Position& p) const {
  if (mode == CalculusMode::Standard) return std_sup(d, eq, c, target, p);
  if (eq.lit < d->size() && (*d)[eq.lit].side(eq.side).is_var()) return vsup(d, eq, c, target, p);
  return sup(d, eq, c, target, p);
}

std::optional<Inference> Calculus::eq_fact(const ClausePtr& c, LitSide kept, LitSide other) const {
  std::span<const Literal> lits = c->literals();
  if (kept.lit >= lits.size() || other.lit >= lits.size() || kept.lit == other.lit) return std::nullopt;
  const Literal& li = lits[kept.lit];
  const Literal& lj = lits[other.lit];
  if (!li.positive || !lj.positive) return std::nullopt;
  const Term& u = li.side(kept.side);
  const Term& v = li.other_side(kept.side);
  const Term& u2 = lj.side(other.side);
  const Term& v2 = lj.other_side(other.side);
  if (u.is_var() || u2.is_var() || u.functor() != u2.functor()) return std::nullopt;
  if (!not_leq(kbo_.compare(u, v)) || !not_leq(kbo_.compare(u2, v2))) return std::nullopt;
  if (!eligible_in(lits, kept.lit, {}, false)) return std::nullopt;

  Inference inf;
  append_except(inf.conclusion, lits, kept.lit, other.lit);
  inf.conclusion.push_back(Literal::neq(v, v2));
  inf.conclusion.push_back(Literal::eq(u, v));
  append_constraints(inf.conclusion, u2, u);
  inf.constraint_count = u.arity();
  inf.record = unary_record(Rule::EqFact, c, static_cast<int>(kept.lit), kept.side, {});
  inf.record.lit_b = static_cast<int>(other.lit);
  inf.record.side_b = other.side;
  return inf;
}

namespace {

std::optional<Inference> factor_with_unifier(const Kbo& kbo, Selection sel, Rule rule,
                                             const ClausePtr& c, LitSide kept, LitSide other,
                                             const Substitution& sigma) {
  std::span<const Literal> lits = c->literals();
  const Literal& li = lits[kept.lit];
  const Literal& lj = lits[other.lit];
  Term us = sigma.apply(li.side(kept.side));
  Term vs = sigma.apply(li.other_side(kept.side));
  Term u2s = sigma.apply(lj.side(other.side));
  Term v2s = sigma.apply(lj.other_side(other.side));
  if (!not_leq(kbo.compare(us, vs)) || !not_leq(kbo.compare(u2s, v2s))) return std::nullopt;
  if (!eligible(kbo, sel, lits, kept.lit, sigma, false)) return std::nullopt;

  Inference inf;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i != kept.lit && i != other.lit) inf.conclusion.push_back(lits[i].map(sigma));
  }
  inf.conclusion.push_back(Literal::neq(vs, v2s));
  inf.conclusion.push_back(Literal::eq(us, vs));
  inf.record = unary_record(rule, c, static_cast<int>(kept.lit), kept.side, sigma);
  inf.record.lit_b = static_cast<int>(other.lit);
  inf.record.side_b = other.side;
  return inf;
}

}  // namespace

std::optional<Inference> Calculus::veq_fact(const ClausePtr& c, LitSide kept, LitSide other) const {
  std::span<const Literal> lits = c->literals();
  if (kept.lit >= lits.size() || other.lit >= lits.size() || kept.lit == other.lit) return std::nullopt;
  const Literal& li = lits[kept.lit];
  const Literal& lj = lits[other.lit];
  if (!li.positive || !lj.positive) return std::nullopt;
  const Term& u = li.side(kept.side);
  const Term& u2 = lj.side(other.side);
  if (!u.is_var() && !u2.is_var()) return std::nullopt;
  if (u.sort() != u2.sort()) return std::nullopt;
  UnifyOutcome uo = mgu(u, u2);
  if (!uo) return std::nullopt;
  return factor_with_unifier(kbo_, sel_, Rule::VEqFact, c, kept, other, uo.unifier());
}

std::optional<Inference> Calculus::std_eq_fact(const ClausePtr& c, LitSide kept,
                                               LitSide other) const {
  std::span<const Literal> lits = c->literals();
  if (kept.lit >= lits.size() || other.lit >= lits.size() || kept.lit == other.lit) return std::nullopt;
  const Literal& li = lits[kept.lit];
  const Literal& lj = lits[other.lit];
  if (!li.positive || !lj.positive) return std::nullopt;
  const Term& u = li.side(kept.side);
  const Term& u2 = lj.side(other.side);
  if (u.sort() != u2.sort()) return std::nullopt;
  UnifyOutcome uo = mgu(u, u2);
  if (!uo) return std::nullopt;
  return factor_with_unifier(kbo_, sel_, Rule::StdEqFact, c, kept, other, uo.unifier());
}

std::optional<Inference> Calculus::decompose(const ClausePtr& c, std::uint32_t lit) const {
  std::span<const Literal> lits = c->literals();
  if (lit >= lits.size()) return std::nullopt;
  const Literal& l = lits[lit];
  if (l.positive || l.lhs.is_var() || l.rhs.is_var()) return std::nullopt;
  if (l.lhs.functor() != l.rhs.functor() || l.lhs == l.rhs) return std::nullopt;
  if (!eligible_in(lits, lit, {}, false)) return std::nullopt;

  Inference inf;
  append_except(inf.conclusion, lits, lit);
  append_constraints(inf.conclusion, l.rhs, l.lhs);
  inf.constraint_count = l.lhs.arity();
  inf.record = unary_record(Rule::Decompose, c, static_cast<int>(lit), 0, {});
  return inf;
}

std::optional<Inference> Calculus::bind(const ClausePtr& c, std::uint32_t lit,
                                        bool simplification) const {
  std::span<const Literal> lits = c->literals();
  if (lit >= lits.size()) return std::nullopt;
  const Literal& l = lits[lit];
  if (l.positive) return std::nullopt;
  int side = -1;
  if (l.lhs.is_var() && !l.rhs.contains_var(l.lhs.var_id())) {
    side = 0;
  } else if (l.rhs.is_var() && !l.lhs.contains_var(l.rhs.var_id())) {
    side = 1;
  }
  if (side < 0) return std::nullopt;
  Substitution sigma;
  sigma.bind(l.side(side), l.other_side(side));
  if (!simplification && !eligible_in(lits, lit, sigma, false)) return std::nullopt;

  Inference inf;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i != lit) inf.conclusion.push_back(lits[i].map(sigma));
  }
  inf.record = unary_record(Rule::Bind, c, static_cast<int>(lit), side, sigma);
  inf.record.simplification = simplification;
  return inf;
}

std::optional<Inference> Calculus::refl_del(const ClausePtr& c, std::uint32_t lit,
                                            bool simplification) const {
  std::span<const Literal> lits = c->literals();
  if (lit >= lits.size()) return std::nullopt;
  const Literal& l = lits[lit];
  if (l.positive || !l.trivial()) return std::nullopt;
  if (!simplification && !eligible_in(lits, lit, {}, false)) return std::nullopt;
  Inference inf;
  append_except(inf.conclusion, lits, lit);
  inf.record = unary_record(Rule::ReflDel, c, static_cast<int>(lit), 0, {});
  inf.record.simplification = simplification;
  return inf;
}

std::optional<Inference> Calculus::eq_res(const ClausePtr& c, std::uint32_t lit) const {
  std::span<const Literal> lits = c->literals();
  if (lit >= lits.size()) return std::nullopt;
  const Literal& l = lits[lit];
  if (l.positive || l.lhs.sort() != l.rhs.sort()) return std::nullopt;
  UnifyOutcome uo = mgu(l.lhs, l.rhs);
  if (!uo) return std::nullopt;
  const Substitution& sigma = uo.unifier();
  if (!eligible_in(lits, lit, sigma, false)) return std::nullopt;
  Inference inf;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i != lit) inf.conclusion.push_back(lits[i].map(sigma));
  }
  inf.record = unary_record(Rule::EqRes, c, static_cast<int>(lit), 0, sigma);
  return inf;
}

std::vector<Inference> Calculus::unary_inferences(CalculusMode mode, const ClausePtr& c) const {
  std::vector<Inference> out;
  auto push = [&out](std::optional<Inference> inf) {
    if (inf) out.push_back(std::move(*inf));
  };
  std::span<const Literal> lits = c->literals();
  for (std::uint32_t i = 0; i < lits.size(); ++i) {
    if (lits[i].positive) {
      for (std::uint32_t j = 0; j < lits.size(); ++j) {
        if (j == i || !lits[j].positive) continue;
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            LitSide kept{i, a};
            LitSide other{j, b};
            if (mode == CalculusMode::Standard) {
              push(std_eq_fact(c, kept, other));
            } else {
              const Term& u = lits[i].side(a);
              const Term& u2 = lits[j].side(b);
              if (u.is_var() || u2.is_var()) {
                push(veq_fact(c, kept, other));
              } else {
                push(eq_fact(c, kept, other));
              }
            }
          }
        }
      }
    } else if (mode == CalculusMode::Standard) {
      push(eq_res(c, i));
    } else {
      push(decompose(c, i));
      push(bind(c, i));
      push(refl_del(c, i));
    }
  }
  return out;
}

std::vector<Inference> Calculus::binary_inferences(CalculusMode mode, const ClausePtr& d,
                                                   const ClausePtr& c) const {
  std::vector<Inference> out;
  for (std::uint32_t i = 0; i < d->size(); ++i) {
    if (!(*d)[i].positive) continue;
    for (int a = 0; a < 2; ++a) {
      for (std::uint32_t j = 0; j < c->size(); ++j) {
        for (int b = 0; b < 2; ++b) {
          for_each_subterm((*c)[j].side(b), [&](const Term& u, const Position& p) {
            if (u.is_var()) return;
            if (auto inf = superpose(mode, d, LitSide{i, a}, c, LitSide{j, b}, p)) {
              out.push_back(std::move(*inf));
            }
          });
        }
      }
    }
  }
  return out;
}

std::optional<Inference> Calculus::replay(const InferenceRecord& rec) const {
  auto premise = [&](std::size_t i) -> const ClausePtr& { return rec.premises.at(i); };
  LitSide a{static_cast<std::uint32_t>(rec.lit_a), rec.side_a};
  LitSide b{static_cast<std::uint32_t>(rec.lit_b), rec.side_b};
  auto lit = static_cast<std::uint32_t>(rec.lit_a);
  switch (rec.rule) {
    case Rule::Input: return std::nullopt;
    case Rule::Sup: return sup(premise(0), a, premise(1), b, rec.path);
    case Rule::VSup: return vsup(premise(0), a, premise(1), b, rec.path);
    case Rule::StdSup: return std_sup(premise(0), a, premise(1), b, rec.path);
    case Rule::EqFact: return eq_fact(premise(0), a, b);
    case Rule::VEqFact: return veq_fact(premise(0), a, b);
    case Rule::StdEqFact: return std_eq_fact(premise(0), a, b);
    case Rule::Decompose: return decompose(premise(0), lit);
    case Rule::Bind: return bind(premise(0), lit, rec.simplification);
    case Rule::ReflDel: return refl_del(premise(0), lit, rec.simplification);
    case Rule::EqRes: return eq_res(premise(0), lit);
    case Rule::DuplicateElim: {
      std::span<const Literal> lits = premise(0)->literals();
      if (lit >= lits.size()) return std::nullopt;
      bool dup = false;
      for (std::size_t i = 0; i < lits.size(); ++i) dup = dup || (i != lit && lits[i] == lits[lit]);
      if (!dup) return std::nullopt;
      Inference inf;
      append_except(inf.conclusion, lits, lit);
      inf.record = rec;
      return inf;
    }
  }
  return std::nullopt;
}

}  // namespace delsup
