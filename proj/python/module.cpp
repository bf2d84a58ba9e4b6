#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <sstream>

#include "delsup/ground.hpp"
#include "delsup/prover.hpp"
#include "delsup/tptp.hpp"
#include "delsup/unify.hpp"

namespace py = pybind11;
using namespace delsup;

namespace {

py::dict outcome_dict(const ProverOutcome& out, const Problem& problem) {
  const SaturationStats& s = out.result.stats;
  py::dict stats;
  stats["iterations"] = s.iterations;
  stats["generated"] = s.generated;
  stats["retained"] = s.retained;
  stats["elapsed_ms"] = s.elapsed_ms;
  py::dict d;
  d["status"] = out.szs;
  d["problem"] = problem.name;
  std::vector<std::string> proof;
  std::istringstream lines(format_proof(out.result.proof, problem.signature));
  for (std::string line; std::getline(lines, line);) proof.push_back(line);
  d["proof"] = proof;
  d["proof_problems"] = out.proof_problems;
  d["stats"] = stats;
  return d;
}

// Prints a term with the caller's variable names instead of X<n>.
std::string print_named(const Term& t, const Signature& sig, const std::map<VarId, std::string>& names) {
  if (t.is_var()) return names.at(t.var_id());
  std::string out = sig.symbol(t.functor()).name;
  if (t.arity() == 0) return out;
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i > 0) out += ',';
    out += print_named(t.arg(i), sig, names);
  }
  return out + ')';
}

ProverOptions prover_options(const std::string& mode, const std::string& selection, double time_limit,
                             std::size_t max_clauses) {
  ProverOptions options;
  options.mode = parse_mode(mode);
  options.selection = parse_selection(selection);
  options.time_limit = time_limit;
  options.max_clauses = max_clauses;
  return options;
}

ProverOutcome run_prover(const Problem& problem, const ProverOptions& options) {
  py::gil_scoped_release release;
  return prove(problem, options);
}

}  // namespace

PYBIND11_MODULE(delsup, m) {
  m.doc() = "Superposition prover with delayed unification";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def(
      "prove",
      [](const std::string& text, const std::string& mode, const std::string& selection, double time_limit,
         std::size_t max_clauses) {
        Problem problem = parse_cnf(text);
        ProverOptions options = prover_options(mode, selection, time_limit, max_clauses);
        return outcome_dict(run_prover(problem, options), problem);
      },
      py::arg("text"), py::arg("mode") = "delayed", py::arg("selection") = "all-negative",
      py::arg("time_limit") = 10.0, py::arg("max_clauses") = 0,
      "Saturates a TPTP CNF problem given as text. Returns status, proof lines and statistics.");

  m.def(
      "prove_file",
      [](const std::string& path, const std::string& mode, const std::string& selection, double time_limit,
         std::size_t max_clauses) {
        Problem problem = parse_file(path);
        ProverOptions options = prover_options(mode, selection, time_limit, max_clauses);
        return outcome_dict(run_prover(problem, options), problem);
      },
      py::arg("path"), py::arg("mode") = "delayed", py::arg("selection") = "all-negative",
      py::arg("time_limit") = 10.0, py::arg("max_clauses") = 0);

  m.def(
      "parse",
      [](const std::string& text) {
        Problem p = parse_cnf(text);
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const InputClause& in : p.inputs) {
          out.emplace_back(in.name, in.role, to_string(in.clause->literals(), p.signature));
        }
        return out;
      },
      py::arg("text"), "Parses CNF text into (name, role, clause) triples.");

  m.def(
      "unify",
      [](const std::string& s, const std::string& t) -> std::optional<std::map<std::string, std::string>> {
        Signature sig;
        std::map<std::string, VarId> vars;
        Term a = parse_term(s, sig, vars);
        Term b = parse_term(t, sig, vars);
        UnifyOutcome u = mgu(a, b);
        if (!u) return std::nullopt;
        std::map<VarId, std::string> names;
        for (const auto& [name, id] : vars) names[id] = name;
        std::map<std::string, std::string> out;
        for (const auto& [name, id] : vars) {
          Term image = u.unifier().apply(Term::var(id));
          if (image == Term::var(id)) continue;
          out[name] = print_named(image, sig, names);
        }
        return out;
      },
      py::arg("s"), py::arg("t"),
      "Most general unifier of two terms as a mapping from variable names, or None.");

  m.def(
      "compare",
      [](const std::string& s, const std::string& t, const std::string& precedence) {
        Signature sig;
        std::map<std::string, VarId> vars;
        Term a = parse_term(s, sig, vars);
        Term b = parse_term(t, sig, vars);
        Kbo kbo(KboParams::uniform(sig, parse_precedence(precedence)));
        return std::string(to_string(kbo.compare(a, b)));
      },
      py::arg("s"), py::arg("t"), py::arg("precedence") = "arity",
      "KBO comparison: Greater, Less, Equal or Incomparable.");

  m.def(
      "check_lifting",
      [](const std::string& text, const std::string& selection, std::size_t depth) {
        Problem p = parse_cnf(text);
        Kbo kbo(KboParams::uniform(p.signature));
        GroundingOptions opts;
        opts.depth = depth;
        LiftingReport r = check_lifting(p.clauses(), p.signature, kbo, parse_selection(selection), opts);
        py::dict d;
        d["closures"] = r.closures;
        d["ground_inferences"] = r.ground_inferences;
        d["exempt"] = r.exempt;
        d["lifted"] = r.lifted;
        d["violations"] = r.violations;
        return d;
      },
      py::arg("text"), py::arg("selection") = "none", py::arg("depth") = 2);
}
