/**
 * @file ground.hpp
 * Ground oracle: bounded Herbrand groundings, the ground superposition
 * calculus on them, and a check that each ground inference lifts to an
 * inference of the delayed calculus.
 *
 * A ground closure is a clause together with a grounding substitution;
 * its literal positions are those of the clause. Ground selection is the
 * selection of the clause, so eligibility reduces to eligible() under the
 * grounding.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delsup/calculus.hpp"
#include "delsup/clause.hpp"
#include "delsup/ordering.hpp"
#include "delsup/term.hpp"

namespace delsup {

/// Ground terms of `sort` of depth at most `depth` (constants have depth 0).
std::vector<Term> herbrand_universe(const Signature& sig, SortId sort, std::size_t depth);

struct GroundClosure {
  ClausePtr clause;
  Substitution theta;  // grounds every variable of clause
  std::vector<Literal> literals;  // clause * theta, same literal order
};

struct GroundingOptions {
  std::size_t depth = 2;
  /// Per clause; 0 = unlimited. Groundings beyond the cap are skipped.
  std::size_t max_per_clause = 50000;
};

/// Groundings of the clauses over the bounded universe. Each ground clause
/// (as a multiset) appears once, attributed to the oldest clause producing it.
std::vector<GroundClosure> groundings(const std::vector<ClausePtr>& clauses, const Signature& sig,
                                      const GroundingOptions& options = {});

enum class GroundRule { Sup, EqFact, EqRes };
const char* to_string(GroundRule r);

struct GroundInference {
  GroundRule rule = GroundRule::Sup;
  /// Sup: {D, C}; EqFact and EqRes: {C}. Indices into the closure list.
  std::vector<std::size_t> premises;
  LitSide a;  // Sup: equation side in D; EqFact: kept literal; EqRes: literal
  LitSide b;  // Sup: rewritten side in C; EqFact: factored literal
  Position path;
  std::vector<Literal> conclusion;
};

/// Checks the side conditions of ground inferences on instances of
/// (renamed-apart) premises. `theta` must ground every premise literal.
/// For Sup, dl and cl are D and C; for unary rules dl is ignored.
bool ground_sup_holds(const Kbo& kbo, Selection sel, std::span<const Literal> dl,
                      std::span<const Literal> cl, const Substitution& theta, LitSide eq,
                      LitSide target, const Position& p);
bool ground_eq_fact_holds(const Kbo& kbo, Selection sel, std::span<const Literal> lits,
                          const Substitution& theta, LitSide kept, LitSide other);
bool ground_eq_res_holds(const Kbo& kbo, Selection sel, std::span<const Literal> lits,
                         const Substitution& theta, std::uint32_t lit);

/// Whether `theta` (over the renamed-apart premise variables of `rec`)
/// turns the recorded non-ground inference into a valid ground inference:
/// Sup and VSup map to ground Sup, EqFact and VEqFact to ground EqFact,
/// Decompose, Bind and ReflDel to ground EqRes.
bool is_valid_ground_instance(const Kbo& kbo, Selection sel, const InferenceRecord& rec,
                              const Substitution& theta);

/// The grounding for a pair of closures in the renamed-apart space used by
/// binary rules: D keeps its variables, C's are shifted by D.var_count().
Substitution combined_grounding(const GroundClosure& d, const GroundClosure& c);

std::vector<GroundInference> ground_inferences(const Kbo& kbo, Selection sel,
                                               const std::vector<GroundClosure>& closures);

struct LiftingReport {
  std::size_t closures = 0;
  std::size_t ground_inferences = 0;
  /// Ground Sup steps at or below a variable position of C; these need no
  /// lifting.
  std::size_t exempt = 0;
  std::size_t lifted = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

LiftingReport check_lifting(const std::vector<ClausePtr>& clauses, const Signature& sig,
                            const Kbo& kbo, Selection sel, const GroundingOptions& options = {});

}  // namespace delsup
