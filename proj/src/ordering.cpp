#include "delsup/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace delsup {

const char* to_string(Order o) {
  switch (o) {
    case Order::Greater: return "Greater";
    case Order::Less: return "Less";
    case Order::Equal: return "Equal";
    case Order::Incomparable: return "Incomparable";
  }
  return "?";
}

PrecedenceScheme parse_precedence(std::string_view name) {
  if (name == "arity") return PrecedenceScheme::Arity;
  if (name == "occurrence") return PrecedenceScheme::Occurrence;
  if (name == "reverse") return PrecedenceScheme::Reverse;
  throw std::invalid_argument("unknown precedence scheme: " + std::string(name));
}

KboParams KboParams::uniform(const Signature& sig, PrecedenceScheme scheme) {
  std::vector<SymbolId> order;  // greatest first
  for (SymbolId f = 0; f < sig.size(); ++f) {
    if (f != kTopSymbol) order.push_back(f);
  }
  switch (scheme) {
    case PrecedenceScheme::Arity:
      std::stable_sort(order.begin(), order.end(), [&](SymbolId a, SymbolId b) {
        return sig.symbol(a).arity() > sig.symbol(b).arity();
      });
      break;
    case PrecedenceScheme::Occurrence:
      break;
    case PrecedenceScheme::Reverse:
      std::reverse(order.begin(), order.end());
      break;
  }
  return with_order(sig, order);
}

KboParams KboParams::with_order(const Signature& sig, const std::vector<SymbolId>& greatest_first) {
  KboParams p;
  p.weight.assign(sig.size(), 1);
  p.precedence.assign(sig.size(), 0);
  std::vector<char> listed(sig.size(), 0);
  std::uint32_t n = static_cast<std::uint32_t>(sig.size());
  std::uint32_t rank = n;
  for (SymbolId f : greatest_first) {
    if (f >= sig.size() || listed[f]) throw std::invalid_argument("bad precedence list");
    listed[f] = 1;
    p.precedence[f] = rank--;
  }
  for (SymbolId f = 0; f < sig.size(); ++f) {
    if (!listed[f] && f != kTopSymbol) p.precedence[f] = rank--;
  }
  p.precedence[kTopSymbol] = 0;
  return p;
}

bool KboParams::admissible(const Signature& sig) const {
  if (var_weight == 0) return false;
  std::uint64_t max_rank = 0;
  for (SymbolId f = 0; f < sig.size(); ++f) {
    max_rank = std::max<std::uint64_t>(max_rank, f < precedence.size() ? precedence[f] : 0);
  }
  for (SymbolId f = 0; f < sig.size(); ++f) {
    std::uint32_t w = f < weight.size() ? weight[f] : 1;
    std::size_t arity = sig.symbol(f).arity();
    if (arity == 0 && w < var_weight) return false;
    if (w == 0) {
      if (arity != 1) return false;
      std::uint64_t r = f < precedence.size() ? precedence[f] : 0;
      if (r != max_rank) return false;
    }
  }
  return true;
}

std::uint64_t Kbo::rank(SymbolId f) const {
  if (f < params_.precedence.size()) return params_.precedence[f];
  return (std::uint64_t{1} << 32) + f;
}

std::int64_t Kbo::weight(SymbolId f) const {
  return f < params_.weight.size() ? params_.weight[f] : 1;
}

namespace {

struct VarBalance {
  std::vector<std::pair<VarId, int>> diff;
  std::int64_t weight = 0;

  void add_var(VarId x, int coef) {
    for (auto& [v, d] : diff) {
      if (v == x) {
        d += coef;
        return;
      }
    }
    diff.emplace_back(x, coef);
  }
  int positive() const {
    return static_cast<int>(std::count_if(diff.begin(), diff.end(), [](auto& p) { return p.second > 0; }));
  }
  int negative() const {
    return static_cast<int>(std::count_if(diff.begin(), diff.end(), [](auto& p) { return p.second < 0; }));
  }
};

}  // namespace

Order Kbo::compare(const Term& s, const Term& t) const {
  if (s == t) return Order::Equal;
  if (s.is_var()) return t.contains_var(s.var_id()) ? Order::Less : Order::Incomparable;
  if (t.is_var()) return s.contains_var(t.var_id()) ? Order::Greater : Order::Incomparable;

  VarBalance bal;
  auto traverse = [&](auto&& self, const Term& u, int coef) -> void {
    if (u.is_var()) {
      bal.weight += coef * static_cast<std::int64_t>(params_.var_weight);
      bal.add_var(u.var_id(), coef);
      return;
    }
    bal.weight += coef * weight(u.functor());
    for (const Term& a : u.args()) self(self, a, coef);
  };
  traverse(traverse, s, 1);
  traverse(traverse, t, -1);
  int pos = bal.positive();
  int neg = bal.negative();

  auto with_vars = [&](Order r) {
    if (r == Order::Greater && neg > 0) return Order::Incomparable;
    if (r == Order::Less && pos > 0) return Order::Incomparable;
    return r;
  };

  if (bal.weight > 0) return with_vars(Order::Greater);
  if (bal.weight < 0) return with_vars(Order::Less);
  if (s.functor() != t.functor()) {
    return with_vars(rank(s.functor()) > rank(t.functor()) ? Order::Greater : Order::Less);
  }
  for (std::size_t i = 0; i < s.arity(); ++i) {
    if (s.arg(i) == t.arg(i)) continue;
    Order r = compare(s.arg(i), t.arg(i));
    if (r == Order::Greater || r == Order::Less) return with_vars(r);
    return Order::Incomparable;
  }
  return Order::Equal;
}

Order Kbo::compare(const Literal& a, const Literal& b) const {
  if (a == b) return Order::Equal;
  auto encode = [](const Literal& l) {
    if (l.positive) return std::vector<Term>{l.lhs, l.rhs};
    return std::vector<Term>{l.lhs, l.lhs, l.rhs, l.rhs};
  };
  std::vector<Term> ma = encode(a);
  std::vector<Term> mb = encode(b);
  return multiset_compare<Term>(ma, mb, [this](const Term& x, const Term& y) { return compare(x, y); });
}

Order Kbo::compare(std::span<const Literal> c, std::span<const Literal> d) const {
  return multiset_compare<Literal>(c, d,
                                   [this](const Literal& x, const Literal& y) { return compare(x, y); });
}

}  // namespace delsup
