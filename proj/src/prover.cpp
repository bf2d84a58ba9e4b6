#include "delsup/prover.hpp"

#include <sstream>

namespace delsup {

SaturationConfig make_config(const Problem& problem, const ProverOptions& options) {
  SaturationConfig config;
  config.mode = options.mode;
  config.selection = options.selection;
  config.kbo = KboParams::uniform(problem.signature, options.precedence);
  config.time_limit = options.time_limit;
  config.max_clauses = options.max_clauses;
  config.max_iterations = options.max_iterations;
  return config;
}

std::string szs_status(const SaturationResult& result) {
  switch (result.status) {
    case SaturationStatus::Unsatisfiable: return "Unsatisfiable";
    case SaturationStatus::Saturated: return "Satisfiable";
    case SaturationStatus::ResourceOut:
      return result.resource == ResourceKind::Time ? "Timeout" : "GaveUp";
  }
  return "GaveUp";
}

ProverOutcome prove(const Problem& problem, const ProverOptions& options) {
  SaturationConfig config = make_config(problem, options);
  ProverOutcome out;
  out.result = saturate(problem.clauses(), config);
  out.szs = szs_status(out.result);
  if (options.check_proof && out.result.status == SaturationStatus::Unsatisfiable) {
    Calculus calculus(Kbo(config.kbo), config.selection);
    out.proof_problems = verify_proof(out.result.proof, calculus);
  }
  return out;
}

std::string format_proof(const std::vector<ClausePtr>& proof, const Signature& sig) {
  std::ostringstream os;
  for (const ClausePtr& c : proof) {
    const InferenceRecord& rec = c->derivation();
    os << c->id() << ". " << to_string(c->literals(), sig) << "  [";
    if (rec.rule == Rule::Input) {
      os << "input " << rec.name;
    } else {
      os << rule_name(rec.rule);
      for (std::size_t i = 0; i < rec.premises.size(); ++i) {
        os << (i ? "," : " ") << rec.premises[i]->id();
      }
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace delsup
