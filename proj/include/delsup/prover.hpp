/**
 * @file prover.hpp
 * Runs saturation on a parsed problem and reports in SZS terms.
 */
#pragma once

#include <string>
#include <vector>

#include "delsup/saturation.hpp"
#include "delsup/tptp.hpp"

namespace delsup {

struct ProverOptions {
  CalculusMode mode = CalculusMode::Delayed;
  Selection selection = Selection::None;
  PrecedenceScheme precedence = PrecedenceScheme::Arity;
  double time_limit = 0;
  std::size_t max_clauses = 0;
  std::size_t max_iterations = 0;
  /// Replays every proof step after a refutation.
  bool check_proof = true;
};

struct ProverOutcome {
  SaturationResult result;
  /// Unsatisfiable, Satisfiable, Timeout or GaveUp.
  std::string szs;
  /// Messages from proof replay; empty when the proof checks or none was
  /// requested.
  std::vector<std::string> proof_problems;
};

SaturationConfig make_config(const Problem& problem, const ProverOptions& options);
std::string szs_status(const SaturationResult& result);
ProverOutcome prove(const Problem& problem, const ProverOptions& options);

/// One line per step: id, clause, rule and premise ids.
std::string format_proof(const std::vector<ClausePtr>& proof, const Signature& sig);

}  // namespace delsup
