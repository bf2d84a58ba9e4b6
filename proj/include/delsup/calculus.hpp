/**
 * @file calculus.hpp
 * Inference rules of the delayed-unification superposition calculus and of
 * classical superposition.
 *
 * Delayed rules never compute a unifier over function symbols. Sup and
 * EqFact pair the arguments of two terms with the same top symbol and add
 * the pairs as negative constraint literals; Decompose, Bind and ReflDel
 * then take single Robinson steps on negative literals. VSup and VEqFact
 * cover the cases where one of the terms is a variable.
 *
 * Every rule takes explicit positions and returns nothing when a side
 * condition fails. Binary rules rename premises apart: D keeps its
 * variables and C is shifted by D.var_count().
 */
#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "delsup/clause.hpp"
#include "delsup/ordering.hpp"

namespace delsup {

enum class CalculusMode { Standard, Delayed, DelayedFp, DelayedEager };

CalculusMode parse_mode(std::string_view name);
const char* to_string(CalculusMode m);
inline bool is_delayed(CalculusMode m) { return m != CalculusMode::Standard; }

struct LitSide {
  std::uint32_t lit = 0;
  int side = 0;
};

/// A rule application before it becomes a clause. The conclusion lives in
/// the premises' (renamed-apart) variable space; the last
/// `constraint_count` literals are the constraint literals.
struct Inference {
  std::vector<Literal> conclusion;
  std::size_t constraint_count = 0;
  InferenceRecord record;

  std::span<const Literal> without_constraints() const {
    return std::span<const Literal>(conclusion).first(conclusion.size() - constraint_count);
  }
  ClausePtr to_clause() const { return Clause::make(conclusion, record); }
};

class Calculus {
 public:
  Calculus(Kbo kbo, Selection sel) : kbo_(std::move(kbo)), sel_(sel) {}

  const Kbo& ordering() const { return kbo_; }
  Selection selection() const { return sel_; }

  // Delayed-unification rules.
  std::optional<Inference> sup(const ClausePtr& d, LitSide eq, const ClausePtr& c, LitSide target,
                               const Position& p) const;
  std::optional<Inference> vsup(const ClausePtr& d, LitSide eq, const ClausePtr& c, LitSide target,
                                const Position& p) const;
  std::optional<Inference> eq_fact(const ClausePtr& c, LitSide kept, LitSide other) const;
  std::optional<Inference> veq_fact(const ClausePtr& c, LitSide kept, LitSide other) const;
  std::optional<Inference> decompose(const ClausePtr& c, std::uint32_t lit) const;
  /// With `simplification` set, eligibility is not required.
  std::optional<Inference> bind(const ClausePtr& c, std::uint32_t lit,
                                bool simplification = false) const;
  std::optional<Inference> refl_del(const ClausePtr& c, std::uint32_t lit,
                                    bool simplification = false) const;

  // Classical superposition with most general unifiers.
  std::optional<Inference> std_sup(const ClausePtr& d, LitSide eq, const ClausePtr& c,
                                   LitSide target, const Position& p) const;
  std::optional<Inference> std_eq_fact(const ClausePtr& c, LitSide kept, LitSide other) const;
  std::optional<Inference> eq_res(const ClausePtr& c, std::uint32_t lit) const;

  /// Dispatches a rewrite at the given positions to Sup, VSup or StdSup.
  std::optional<Inference> superpose(CalculusMode mode, const ClausePtr& d, LitSide eq,
                                     const ClausePtr& c, LitSide target, const Position& p) const;

  /// All unary inferences of the mode on c.
  std::vector<Inference> unary_inferences(CalculusMode mode, const ClausePtr& c) const;
  /// All rewrites of c by equations of d, trying every position (no index).
  std::vector<Inference> binary_inferences(CalculusMode mode, const ClausePtr& d,
                                           const ClausePtr& c) const;

  /// Re-runs the recorded rule on the recorded premises and positions,
  /// checking all side conditions again.
  std::optional<Inference> replay(const InferenceRecord& rec) const;

 private:
  bool eligible_in(std::span<const Literal> lits, std::size_t i, const Substitution& sigma,
                   bool strict) const {
    return eligible(kbo_, sel_, lits, i, sigma, strict);
  }

  Kbo kbo_;
  Selection sel_;
};

}  // namespace delsup
