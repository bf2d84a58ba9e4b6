#include "delsup/term.hpp"

#include <algorithm>
#include <sstream>

namespace delsup {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::var(VarId id, SortId sort) {
  auto node = std::make_shared<Node>();
  node->is_var = true;
  node->id = id;
  node->sort = sort;
  node->size = 1;
  node->var_bound = id + 1;
  node->hash = mix(mix(0x51ed27ULL, id), sort);
  return Term(std::move(node));
}

Term Term::app(SymbolId functor, SortId sort, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->is_var = false;
  node->id = functor;
  node->sort = sort;
  std::size_t h = mix(0xa11ceULL, functor);
  std::uint32_t size = 1;
  VarId bound = 0;
  for (const Term& a : args) {
    size += a.size();
    bound = std::max(bound, a.var_bound());
    h = mix(h, a.hash());
  }
  node->size = size;
  node->var_bound = bound;
  node->hash = h;
  node->args = std::move(args);
  return Term(std::move(node));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.is_var != y.is_var || x.id != y.id || x.sort != y.sort ||
      x.size != y.size) {
    return false;
  }
  for (std::size_t i = 0; i < x.args.size(); ++i) {
    if (x.args[i] != y.args[i]) return false;
  }
  return true;
}

bool Term::contains_var(VarId x) const {
  if (x >= var_bound()) return false;
  if (is_var()) return var_id() == x;
  for (const Term& a : args()) {
    if (a.contains_var(x)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

Signature::Signature() {
  sorts_ = {"$i", "$o"};
  add_symbol("$true", {}, kBoolSort);
}

SortId Signature::add_sort(std::string name) {
  if (auto s = find_sort(name)) return *s;
  sorts_.push_back(std::move(name));
  return static_cast<SortId>(sorts_.size() - 1);
}

std::optional<SortId> Signature::find_sort(std::string_view name) const {
  for (std::size_t i = 0; i < sorts_.size(); ++i) {
    if (sorts_[i] == name) return static_cast<SortId>(i);
  }
  return std::nullopt;
}

SymbolId Signature::add_symbol(std::string name, std::vector<SortId> arg_sorts,
                               SortId result_sort) {
  for (SortId s : arg_sorts) {
    if (s >= sorts_.size()) throw SortError("unknown sort id in symbol " + name);
  }
  if (result_sort >= sorts_.size()) throw SortError("unknown result sort in symbol " + name);
  auto [lo, hi] = by_name_.equal_range(name);
  for (auto it = lo; it != hi; ++it) {
    const Symbol& s = symbols_[it->second];
    if (s.arity() == arg_sorts.size() && s.result_sort == result_sort) {
      if (s.arg_sorts != arg_sorts) {
        throw SortError("symbol " + name + " redeclared with different argument sorts");
      }
      return it->second;
    }
  }
  auto id = static_cast<SymbolId>(symbols_.size());
  by_name_.emplace(name, id);
  symbols_.push_back(Symbol{std::move(name), std::move(arg_sorts), result_sort});
  return id;
}

std::optional<SymbolId> Signature::find(std::string_view name, std::size_t arity) const {
  auto [lo, hi] = by_name_.equal_range(std::string(name));
  std::optional<SymbolId> best;
  for (auto it = lo; it != hi; ++it) {
    if (symbols_[it->second].arity() == arity && (!best || it->second < *best)) {
      best = it->second;
    }
  }
  return best;
}

std::vector<SymbolId> Signature::find_all(std::string_view name) const {
  std::vector<SymbolId> out;
  auto [lo, hi] = by_name_.equal_range(std::string(name));
  for (auto it = lo; it != hi; ++it) out.push_back(it->second);
  std::sort(out.begin(), out.end());
  return out;
}

Term Signature::app(SymbolId f, std::vector<Term> args) const {
  const Symbol& s = symbol(f);
  if (args.size() != s.arity()) {
    throw SortError("arity mismatch applying " + s.name + ": expected " +
                    std::to_string(s.arity()) + ", got " + std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].sort() != s.arg_sorts[i]) {
      throw SortError("argument " + std::to_string(i + 1) + " of " + s.name + " is ill-sorted");
    }
  }
  return Term::app(f, s.result_sort, std::move(args));
}

Term Signature::fn(std::string_view name, std::vector<Term> args) {
  std::vector<SortId> arg_sorts(args.size(), kIndividualSort);
  SymbolId f = add_symbol(std::string(name), std::move(arg_sorts), kIndividualSort);
  return app(f, std::move(args));
}

// ---------------------------------------------------------------------------

Position Position::child(std::uint32_t i) const {
  Position p = *this;
  p.path.push_back(i);
  return p;
}

bool Position::is_prefix_of(const Position& other) const {
  return path.size() <= other.path.size() &&
         std::equal(path.begin(), path.end(), other.path.begin());
}

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::uint32_t i : p.path) {
    if (cur->is_var() || i == 0 || i > cur->arity()) {
      throw InvalidPosition("position does not address a subterm");
    }
    cur = &cur->arg(i - 1);
  }
  return *cur;
}

namespace {

Term replace_rec(const Term& t, std::span<const std::uint32_t> path, const Term& u) {
  if (path.empty()) {
    if (t.sort() != u.sort()) throw SortError("replacement changes the sort of a subterm");
    return u;
  }
  std::uint32_t i = path.front();
  if (t.is_var() || i == 0 || i > t.arity()) {
    throw InvalidPosition("position does not address a subterm");
  }
  std::vector<Term> args(t.args().begin(), t.args().end());
  args[i - 1] = replace_rec(args[i - 1], path.subspan(1), u);
  return Term::app(t.functor(), t.sort(), std::move(args));
}

void collect_vars(const Term& t, std::vector<VarId>& out) {
  if (t.ground()) return;
  if (t.is_var()) {
    out.push_back(t.var_id());
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

void walk(const Term& t, Position& pos,
          const std::function<void(const Term&, const Position&)>& fn) {
  fn(t, pos);
  if (t.is_var()) return;
  for (std::uint32_t i = 0; i < t.arity(); ++i) {
    pos.path.push_back(i + 1);
    walk(t.arg(i), pos, fn);
    pos.path.pop_back();
  }
}

}  // namespace

Term replace_at(const Term& t, const Position& p, const Term& u) {
  return replace_rec(t, p.path, u);
}

std::vector<VarId> vars(const Term& t) {
  std::vector<VarId> out;
  collect_vars(t, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void for_each_subterm(const Term& t,
                      const std::function<void(const Term&, const Position&)>& fn) {
  Position pos;
  walk(t, pos, fn);
}

// ---------------------------------------------------------------------------

void Substitution::bind(const Term& x, Term t) {
  if (!x.is_var()) throw SortError("only variables can be bound");
  if (x.sort() != t.sort()) throw SortError("binding changes the sort of a variable");
  auto it = std::lower_bound(bindings_.begin(), bindings_.end(), x.var_id(),
                             [](const Binding& b, VarId v) { return b.first < v; });
  bool identity = t.is_var() && t.var_id() == x.var_id();
  if (it != bindings_.end() && it->first == x.var_id()) {
    if (identity) {
      bindings_.erase(it);
    } else {
      it->second = std::move(t);
    }
    return;
  }
  if (!identity) bindings_.insert(it, Binding{x.var_id(), std::move(t)});
}

const Term* Substitution::find(VarId x) const {
  auto it = std::lower_bound(bindings_.begin(), bindings_.end(), x,
                             [](const Binding& b, VarId v) { return b.first < v; });
  if (it != bindings_.end() && it->first == x) return &it->second;
  return nullptr;
}

Term Substitution::apply(const Term& t) const {
  if (bindings_.empty() || t.ground() || t.var_bound() <= bindings_.front().first) return t;
  if (t.is_var()) {
    const Term* b = find(t.var_id());
    return b ? *b : t;
  }
  std::vector<Term> args;
  bool changed = false;
  args.reserve(t.arity());
  for (const Term& a : t.args()) {
    args.push_back(apply(a));
    changed = changed || !args.back().same_node(a);
  }
  if (!changed) return t;
  return Term::app(t.functor(), t.sort(), std::move(args));
}

bool Substitution::is_idempotent() const {
  for (const auto& [x, t] : bindings_) {
    for (VarId y : vars(t)) {
      if (contains(y)) return false;
    }
  }
  return true;
}

Substitution Substitution::compose(const Substitution& first, const Substitution& then) {
  Substitution out;
  for (const auto& [x, t] : first.bindings_) {
    out.bind(Term::var(x, t.sort()), then.apply(t));
  }
  for (const auto& [y, u] : then.bindings_) {
    if (!first.contains(y)) out.bind(Term::var(y, u.sort()), u);
  }
  return out;
}

Term shift_vars(const Term& t, VarId offset) {
  if (offset == 0 || t.ground()) return t;
  if (t.is_var()) return Term::var(t.var_id() + offset, t.sort());
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(shift_vars(a, offset));
  return Term::app(t.functor(), t.sort(), std::move(args));
}

// ---------------------------------------------------------------------------

namespace {

void print(std::ostream& os, const Term& t, const Signature& sig) {
  if (t.is_var()) {
    os << 'X' << t.var_id();
    return;
  }
  const std::string& name = t.functor() == kTopSymbol ? std::string("tTop")
                                                      : sig.symbol(t.functor()).name;
  os << name;
  if (t.arity() == 0) return;
  os << '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) os << ',';
    print(os, t.arg(i), sig);
  }
  os << ')';
}

}  // namespace

std::string to_string(const Term& t, const Signature& sig) {
  std::ostringstream os;
  print(os, t, sig);
  return os.str();
}

std::string to_string(const Substitution& s, const Signature& sig) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [x, t] : s) {
    if (!first) os << ", ";
    first = false;
    os << 'X' << x << " -> ";
    print(os, t, sig);
  }
  os << '}';
  return os.str();
}

}  // namespace delsup
