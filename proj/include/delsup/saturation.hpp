/**
 * @file saturation.hpp
 * Otter-style given-clause saturation.
 *
 * New clauses are simplified (ReflDel, duplicate literals, eager Bind in
 * delayed-eager mode, tautology deletion, forward subsumption against
 * active and passive) and queued. The given clause is picked by a 1:4
 * age/weight ratio, activated into the indices, and combined with the
 * active set.
 */
#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "delsup/calculus.hpp"
#include "delsup/clause.hpp"
#include "delsup/index.hpp"

namespace delsup {

/// Passive clause queue alternating between oldest and lightest clause.
class PassiveQueue {
 public:
  explicit PassiveQueue(unsigned age_picks = 1, unsigned weight_picks = 4)
      : age_picks_(age_picks), weight_picks_(weight_picks) {}

  void push(ClausePtr c);
  /// Precondition: not empty. The first of every age+weight picks is the
  /// oldest clause, the rest the lightest; ties go to the lower id.
  ClausePtr pop();
  bool empty() const { return clauses_.empty(); }
  std::size_t size() const { return clauses_.size(); }

 private:
  unsigned age_picks_;
  unsigned weight_picks_;
  std::uint64_t counter_ = 0;
  std::set<Clause::Id> by_age_;
  std::set<std::pair<std::uint32_t, Clause::Id>> by_weight_;
  std::unordered_map<Clause::Id, ClausePtr> clauses_;
};

inline ClausePtr pick_given(PassiveQueue& passive) { return passive.pop(); }

struct SaturationConfig {
  CalculusMode mode = CalculusMode::Delayed;
  Selection selection = Selection::None;
  KboParams kbo;
  /// Seconds; 0 disables the limit. Checked between iterations, with a
  /// hard stop at twice the limit inside an iteration.
  double time_limit = 0;
  /// Maximum number of retained (active + passive) clauses; 0 = unlimited.
  std::size_t max_clauses = 0;
  std::size_t max_iterations = 0;
  unsigned age_picks = 1;
  unsigned weight_picks = 4;
  bool forward_subsumption = true;
  /// Restricts generating inferences to these rules; empty allows all.
  std::set<Rule> allowed_rules;
};

enum class SaturationStatus { Unsatisfiable, Saturated, ResourceOut };
enum class ResourceKind { None, Time, Clauses, Iterations };

const char* to_string(SaturationStatus s);

struct SaturationStats {
  std::uint64_t iterations = 0;
  std::uint64_t generated = 0;
  std::uint64_t retained = 0;
  std::uint64_t refl_del = 0;
  std::uint64_t duplicate_literals = 0;
  std::uint64_t eager_bind = 0;
  std::uint64_t tautologies = 0;
  std::uint64_t subsumed = 0;
  std::uint64_t index_queries = 0;
  std::uint64_t index_candidates = 0;
  std::uint64_t active = 0;
  std::uint64_t passive = 0;
  double elapsed_ms = 0;
  std::map<Rule, std::uint64_t> by_rule;

  void print(std::ostream& os) const;
};

struct SaturationResult {
  SaturationStatus status = SaturationStatus::Saturated;
  ResourceKind resource = ResourceKind::None;
  ClausePtr refutation;
  /// Derivation of the empty clause, premises before conclusions.
  std::vector<ClausePtr> proof;
  SaturationStats stats;
};

SaturationResult saturate(const std::vector<ClausePtr>& input, const SaturationConfig& config);

/// Every clause in the derivation DAG of `root`, ordered by id.
std::vector<ClausePtr> extract_proof(const ClausePtr& root);

/// Replays every non-input step and re-checks its side conditions.
/// Returns one message per failing step; empty means the proof checks.
std::vector<std::string> verify_proof(const std::vector<ClausePtr>& proof, const Calculus& calculus);

/// Rule counts over the proof, separating generating steps from
/// simplification steps.
std::map<Rule, int> proof_rule_counts(const std::vector<ClausePtr>& proof);

}  // namespace delsup
