#include "helpers.hpp"

#include <sstream>

#include "../support/golden.hpp"
#include "delsup/saturation.hpp"

using namespace delsup;
using namespace delsup::testing;

namespace {

SaturationResult run(const std::vector<ClausePtr>& input, const Signature& sig,
                     CalculusMode mode = CalculusMode::Delayed,
                     Selection sel = Selection::AllNegative) {
  SaturationConfig config;
  config.mode = mode;
  config.selection = sel;
  config.kbo = KboParams::uniform(sig);
  config.time_limit = 10;
  return saturate(input, config);
}

ProverOutcome prove_file(const std::string& name, CalculusMode mode,
                         Selection sel = Selection::AllNegative, double limit = 10) {
  ProverOptions options;
  options.mode = mode;
  options.selection = sel;
  options.time_limit = limit;
  return prove(parse_file(corpus_file(name)), options);
}

const CalculusMode kModes[] = {CalculusMode::Standard, CalculusMode::Delayed,
                               CalculusMode::DelayedFp, CalculusMode::DelayedEager};

}  // namespace

TEST_CASE("passive queue picks oldest then lightest") {
  Syntax s;
  PassiveQueue one;
  ClausePtr only = s.clause({"a = b"});
  one.push(only);
  CHECK(one.pop() == only);
  CHECK(one.empty());

  PassiveQueue tie;
  ClausePtr first = s.clause({"a = b"});
  ClausePtr second = s.clause({"b = c"});
  tie.push(second);
  tie.push(first);
  CHECK(tie.pop() == first);  // age pick
  CHECK(tie.pop() == second);

  // Pick 1 by age, picks 2-5 by weight, pick 6 by age again.
  PassiveQueue q;
  ClausePtr heavy = s.clause({"f(f(f(a))) = b"});
  std::vector<ClausePtr> light;
  for (int i = 0; i < 6; ++i) light.push_back(s.clause({"a = b"}));
  ClausePtr heavy2 = s.clause({"f(f(f(f(a)))) = b"});
  q.push(heavy);
  for (const ClausePtr& c : light) q.push(c);
  q.push(heavy2);
  CHECK(q.pop() == heavy);
  for (int i = 0; i < 4; ++i) CHECK(q.pop() == light[i]);
  CHECK(q.pop() == light[4]);  // oldest remaining is also a light clause
  CHECK(q.pop() == light[5]);
  CHECK(q.pop() == heavy2);
}

TEST_CASE("golden derivations") {
  for (const GoldenCase& g : golden_cases()) {
    CAPTURE(g.file);
    GoldenRun r = run_golden(g);
    REQUIRE(r.result.status == SaturationStatus::Unsatisfiable);
    CHECK(r.counts == g.expected);
    CHECK(r.replay_problems.empty());
    CHECK(r.result.stats.generated <= 100);
    CHECK(r.ms < 1000);
  }
}

TEST_CASE("ex2 without rule restriction") {
  ProverOutcome out = prove_file("ex2.p", CalculusMode::Delayed);
  CHECK(out.szs == "Unsatisfiable");
  CHECK(out.proof_problems.empty());
}

TEST_CASE("every mode refutes the worked examples") {
  for (const char* name : {"ex1.p", "ex2.p", "intro.p"}) {
    for (CalculusMode mode : kModes) {
      for (Selection sel : {Selection::None, Selection::AllNegative}) {
        CAPTURE(name);
        CAPTURE(to_string(mode));
        ProverOutcome out = prove_file(name, mode, sel);
        CHECK(out.szs == "Unsatisfiable");
        CHECK(out.proof_problems.empty());
      }
    }
  }
}

TEST_CASE("a single equation saturates") {
  Syntax s;
  for (CalculusMode mode : kModes) {
    SaturationResult r = run({s.clause({"a = b"})}, s.sig, mode, Selection::None);
    CHECK(r.status == SaturationStatus::Saturated);
  }
}

TEST_CASE("simplification pipeline") {
  Syntax s;
  SaturationResult bottom = run({s.clause({"t != t", "c != c", "c != c"})}, s.sig);
  REQUIRE(bottom.status == SaturationStatus::Unsatisfiable);
  CHECK(proof_rule_counts(bottom.proof)[Rule::ReflDel] == 3);
  CHECK(bottom.stats.iterations == 0);

  SaturationResult taut = run({s.clause({"a = a", "b = c"})}, s.sig);
  CHECK(taut.status == SaturationStatus::Saturated);
  CHECK(taut.stats.tautologies == 1);
  CHECK(taut.stats.retained == 0);

  SaturationResult sub = run({s.clause({"b = a"}), s.clause({"a = b", "c = d"})}, s.sig);
  CHECK(sub.status == SaturationStatus::Saturated);
  CHECK(sub.stats.subsumed >= 1);

  SaturationResult dup = run({s.clause({"a = b", "a = b", "f(X) != f(a)"})}, s.sig,
                             CalculusMode::Delayed, Selection::None);
  CHECK(dup.stats.duplicate_literals == 1);
}

TEST_CASE("eager Bind in delayed-eager mode") {
  Syntax s;
  SaturationResult eager = run({s.clause({"X != a", "f(X) = b"})}, s.sig, CalculusMode::DelayedEager);
  CHECK(eager.stats.eager_bind == 1);
  SaturationResult lazy = run({s.clause({"X != a", "f(X) = b"})}, s.sig, CalculusMode::Delayed);
  CHECK(lazy.stats.eager_bind == 0);
  CHECK(lazy.stats.by_rule[Rule::Bind] == 1);
}

TEST_CASE("runs are deterministic") {
  for (CalculusMode mode : kModes) {
    CAPTURE(to_string(mode));
    ProverOutcome a = prove_file("eq_grp_inv_unit.p", mode);
    ProverOutcome b = prove_file("eq_grp_inv_unit.p", mode);
    CHECK(a.szs == b.szs);
    CHECK(a.result.stats.generated == b.result.stats.generated);
    CHECK(a.result.stats.iterations == b.result.stats.iterations);
  }
}

TEST_CASE("resource limits") {
  Problem p = parse_file(corpus_file("eq_grp_exp2_comm.p"));
  ProverOptions options;
  options.mode = CalculusMode::Delayed;
  options.selection = Selection::AllNegative;

  options.max_iterations = 5;
  ProverOutcome iters = prove(p, options);
  CHECK(iters.szs == "GaveUp");
  CHECK(iters.result.resource == ResourceKind::Iterations);
  CHECK(iters.result.stats.iterations == 5);

  options.max_iterations = 0;
  options.max_clauses = 50;
  ProverOutcome clauses = prove(p, options);
  CHECK(clauses.szs == "GaveUp");
  CHECK(clauses.result.resource == ResourceKind::Clauses);

  options.max_clauses = 0;
  options.time_limit = 0.2;
  ProverOutcome time = prove(p, options);
  CHECK(time.szs == "Timeout");
  CHECK(time.result.stats.elapsed_ms < 2 * 200 + 100);
}

TEST_CASE("satisfiable corpus problems saturate in every mode") {
  for (const char* name : {"sat_distinct.p", "sat_trivial_eq.p", "sat_unit_eqs.p", "sat_horn_model.p",
                           "sat_disjunction.p", "sat_offset.p", "sat_pigeons_fit.p"}) {
    for (CalculusMode mode : kModes) {
      CAPTURE(name);
      CAPTURE(to_string(mode));
      CHECK(prove_file(name, mode).szs == "Satisfiable");
    }
  }
}

TEST_CASE("proof replay detects a tampered step") {
  Syntax s;
  SaturationResult r = run({s.clause({"f(X,g(X)) != t"}), s.clause({"f(g(b),Y) = t"})}, s.sig);
  REQUIRE(r.status == SaturationStatus::Unsatisfiable);
  Calculus calc(Kbo(KboParams::uniform(s.sig)), Selection::AllNegative);
  CHECK(verify_proof(r.proof, calc).empty());

  // Claim the empty clause follows from the first input directly.
  InferenceRecord fake;
  fake.rule = Rule::Bind;
  fake.premises = {r.proof.front()};
  fake.lit_a = 0;
  std::vector<ClausePtr> bad = {r.proof.front(), Clause::make({}, fake)};
  CHECK_FALSE(verify_proof(bad, calc).empty());
}

TEST_CASE("statistics report") {
  SaturationResult r = prove_file("ex1.p", CalculusMode::Delayed).result;
  std::ostringstream os;
  r.stats.print(os);
  CHECK(os.str().find("% iterations: ") != std::string::npos);
  CHECK(os.str().find("generated") != std::string::npos);
}
