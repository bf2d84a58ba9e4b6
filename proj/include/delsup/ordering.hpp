/**
 * @file ordering.hpp
 * Knuth-Bendix ordering on terms and its multiset extensions to literals
 * and clauses.
 *
 * Positive literals compare as the multiset {s, t}, negative ones as
 * {s, s, t, t}; clauses as multisets of literals. Side conditions in the
 * calculus are phrased as "not less-or-equal", which holds for
 * Incomparable.
 */
#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "delsup/literal.hpp"

namespace delsup {

enum class Order { Greater, Less, Equal, Incomparable };

inline Order reverse(Order o) {
  switch (o) {
    case Order::Greater: return Order::Less;
    case Order::Less: return Order::Greater;
    default: return o;
  }
}
/// s not<= t : Greater or Incomparable.
inline bool not_leq(Order o) { return o == Order::Greater || o == Order::Incomparable; }
const char* to_string(Order o);

enum class PrecedenceScheme { Arity, Occurrence, Reverse };
PrecedenceScheme parse_precedence(std::string_view name);

struct KboParams {
  /// Per-symbol weight; symbols beyond the vector weigh 1.
  std::vector<std::uint32_t> weight;
  std::uint32_t var_weight = 1;
  /// Per-symbol rank, larger is greater. Must be injective over the
  /// signature. Symbols beyond the vector rank above all listed ones, by id.
  std::vector<std::uint32_t> precedence;

  /// All weights 1. Symbol ids are assumed to follow first occurrence in the
  /// input (the parser registers them that way). Top is always least.
  ///   Arity:      higher arity first, then earlier occurrence first
  ///   Occurrence: earlier occurrence is greater
  ///   Reverse:    later occurrence is greater
  static KboParams uniform(const Signature& sig, PrecedenceScheme scheme = PrecedenceScheme::Arity);
  /// Uniform weights and an explicit precedence listed greatest first;
  /// unlisted symbols rank below the listed ones, top least of all.
  static KboParams with_order(const Signature& sig, const std::vector<SymbolId>& greatest_first);

  /// Admissibility: positive weights and var_weight no larger than any
  /// constant's weight; a weight-0 unary symbol must be greatest.
  bool admissible(const Signature& sig) const;
};

class Kbo {
 public:
  Kbo() = default;
  explicit Kbo(KboParams params) : params_(std::move(params)) {}

  Order compare(const Term& s, const Term& t) const;
  Order compare(const Literal& a, const Literal& b) const;
  Order compare(std::span<const Literal> c, std::span<const Literal> d) const;

  bool greater(const Term& s, const Term& t) const { return compare(s, t) == Order::Greater; }
  const KboParams& params() const { return params_; }

 private:
  std::uint64_t rank(SymbolId f) const;
  std::int64_t weight(SymbolId f) const;

  KboParams params_;
};

inline Order cmp_terms(const Kbo& k, const Term& s, const Term& t) { return k.compare(s, t); }
inline Order cmp_literals(const Kbo& k, const Literal& a, const Literal& b) {
  return k.compare(a, b);
}
inline Order cmp_clauses(const Kbo& k, std::span<const Literal> c, std::span<const Literal> d) {
  return k.compare(c, d);
}

/// Dershowitz-Manna extension of a partial order given by `cmp` to finite
/// multisets; `cmp` must return Equal exactly for identical elements.
template <class T, class Cmp>
Order multiset_compare(std::span<const T> a, std::span<const T> b, Cmp&& cmp) {
  std::vector<char> used_a(a.size(), 0);
  std::vector<char> used_b(b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used_b[j] && a[i] == b[j]) {
        used_a[i] = used_b[j] = 1;
        break;
      }
    }
  }
  std::vector<const T*> ra;
  std::vector<const T*> rb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!used_a[i]) ra.push_back(&a[i]);
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!used_b[j]) rb.push_back(&b[j]);
  }
  if (ra.empty() && rb.empty()) return Order::Equal;
  auto dominated = [&](const std::vector<const T*>& big, const std::vector<const T*>& small,
                       Order want) {
    if (big.empty()) return false;
    for (const T* y : small) {
      bool found = false;
      for (const T* x : big) {
        if (cmp(*x, *y) == want) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };
  if (dominated(ra, rb, Order::Greater)) return Order::Greater;
  if (dominated(rb, ra, Order::Greater)) return Order::Less;
  return Order::Incomparable;
}

}  // namespace delsup
