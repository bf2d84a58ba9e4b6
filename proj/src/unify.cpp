#include "delsup/unify.hpp"

#include <vector>

namespace delsup {

namespace {

// Triangular bindings; resolved to idempotent form once solving finishes.
class Solver {
 public:
  bool solve(const Term& s, const Term& t) {
    std::vector<std::pair<Term, Term>> todo{{s, t}};
    while (!todo.empty()) {
      auto [a, b] = std::move(todo.back());
      todo.pop_back();
      a = deref(a);
      b = deref(b);
      if (a == b) continue;
      if (a.is_var() || b.is_var()) {
        const Term& x = a.is_var() ? a : b;
        const Term& u = a.is_var() ? b : a;
        if (occurs(x.var_id(), u)) {
          failure_ = UnifyFailure::Occurs;
          return false;
        }
        triangle_.bind(x, u);
        continue;
      }
      if (a.functor() != b.functor() || a.arity() != b.arity()) {
        failure_ = UnifyFailure::Clash;
        return false;
      }
      for (std::size_t i = a.arity(); i-- > 0;) todo.emplace_back(a.arg(i), b.arg(i));
    }
    return true;
  }

  Substitution result() const {
    Substitution out;
    for (const auto& [x, t] : triangle_) out.bind(Term::var(x, t.sort()), resolve(t));
    return out;
  }

  UnifyFailure failure() const { return failure_; }

 private:
  Term deref(Term t) const {
    while (t.is_var()) {
      const Term* b = triangle_.find(t.var_id());
      if (!b) break;
      t = *b;
    }
    return t;
  }

  bool occurs(VarId x, const Term& t) const {
    Term d = deref(t);
    if (d.is_var()) return d.var_id() == x;
    for (const Term& a : d.args()) {
      if (occurs(x, a)) return true;
    }
    return false;
  }

  Term resolve(const Term& t) const {
    if (t.ground()) return t;
    if (t.is_var()) {
      const Term* b = triangle_.find(t.var_id());
      return b ? resolve(*b) : t;
    }
    std::vector<Term> args;
    args.reserve(t.arity());
    bool changed = false;
    for (const Term& a : t.args()) {
      args.push_back(resolve(a));
      changed = changed || !args.back().same_node(a);
    }
    if (!changed) return t;
    return Term::app(t.functor(), t.sort(), std::move(args));
  }

  Substitution triangle_;
  UnifyFailure failure_ = UnifyFailure::Clash;
};

}  // namespace

UnifyOutcome mgu(const Term& s, const Term& t) {
  if (s.sort() != t.sort()) throw SortError("mgu of terms with different sorts");
  Solver solver;
  if (!solver.solve(s, t)) return solver.failure();
  return solver.result();
}

UnifyOutcome mgu(std::span<const std::pair<Term, Term>> pairs) {
  Solver solver;
  for (const auto& [s, t] : pairs) {
    if (s.sort() != t.sort()) throw SortError("mgu of terms with different sorts");
    if (!solver.solve(s, t)) return solver.failure();
  }
  return solver.result();
}

const Term* Matcher::lookup(VarId x) const {
  for (const auto& [y, t] : bindings_) {
    if (y == x) return &t;
  }
  return nullptr;
}

bool Matcher::match(const Term& pattern, const Term& target) {
  std::size_t m = mark();
  if (match_rec(pattern, target)) return true;
  undo(m);
  return false;
}

bool Matcher::match_rec(const Term& pattern, const Term& target) {
  if (pattern.is_var()) {
    if (pattern.sort() != target.sort()) return false;
    if (const Term* b = lookup(pattern.var_id())) return *b == target;
    bindings_.emplace_back(pattern.var_id(), target);
    return true;
  }
  if (target.is_var() || pattern.functor() != target.functor() ||
      pattern.arity() != target.arity()) {
    return false;
  }
  if (pattern.ground()) return pattern == target;
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match_rec(pattern.arg(i), target.arg(i))) return false;
  }
  return true;
}

Substitution Matcher::substitution() const {
  Substitution out;
  for (const auto& [x, t] : bindings_) out.bind(Term::var(x, t.sort()), t);
  return out;
}

std::optional<Substitution> match_term(const Term& pattern, const Term& target) {
  if (pattern.sort() != target.sort()) throw SortError("matching terms of different sorts");
  Matcher m;
  if (!m.match(pattern, target)) return std::nullopt;
  return m.substitution();
}

}  // namespace delsup
