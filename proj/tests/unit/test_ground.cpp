#include "helpers.hpp"

#include "../support/golden.hpp"
#include "delsup/ground.hpp"

using namespace delsup;
using namespace delsup::testing;

namespace {

std::vector<std::string> printed(const std::vector<GroundClosure>& closures, const Signature& sig) {
  std::vector<std::string> out;
  for (const GroundClosure& g : closures) out.push_back(to_string(g.literals, sig));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("Herbrand universe sizes follow the term-count recurrence") {
  Syntax s;
  s.t("g(f(a),a)");
  // With one constant, one unary and one binary symbol, the number of terms
  // of depth at most k is T(0) = 1, T(k) = 1 + T(k-1) + T(k-1)^2.
  std::size_t expected = 1;
  for (std::size_t depth = 0; depth <= 3; ++depth) {
    CAPTURE(depth);
    CHECK(herbrand_universe(s.sig, kIndividualSort, depth).size() == expected);
    expected = 1 + expected + expected * expected;
  }
  CHECK(herbrand_universe(s.sig, kBoolSort, 2).size() == 1);  // only top
}

TEST_CASE("grounding examples") {
  Syntax s;
  ClausePtr c = s.clause({"X = a"});
  s.t("b");
  GroundingOptions depth0;
  depth0.depth = 0;
  CHECK(printed(groundings({c}, s.sig, depth0), s.sig) == std::vector<std::string>{"a = a", "b = a"});

  ClausePtr g = s.clause({"a = b"});
  auto one = groundings({g}, s.sig, depth0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].theta.empty());

  Syntax s2;
  ClausePtr fx = s2.clause({"f(X) = X"});
  s2.t("a");
  GroundingOptions depth1;
  depth1.depth = 1;
  CHECK(printed(groundings({fx}, s2.sig, depth1), s2.sig) ==
        std::vector<std::string>{"f(a) = a", "f(f(a)) = f(a)"});
}

TEST_CASE("groundings keep the oldest preimage") {
  Syntax s;
  ClausePtr older = s.clause({"X = a"});
  ClausePtr newer = s.clause({"b = Y"});
  GroundingOptions depth0;
  depth0.depth = 0;
  auto closures = groundings({newer, older}, s.sig, depth0);
  // b = a arises from both; the older clause keeps it.
  std::size_t from_older = 0;
  for (const GroundClosure& g : closures) {
    if (to_string(g.literals, s.sig) == "b = a" || to_string(g.literals, s.sig) == "a = b") {
      CHECK(g.clause == older);
      ++from_older;
    }
  }
  CHECK(from_older == 1);
  CHECK(closures.size() == 3);
}

TEST_CASE("ground inference examples") {
  Syntax s;
  std::vector<ClausePtr> clauses = {s.clause({"f(a) = a"}), s.clause({"f(a) != a"})};
  Kbo kbo(KboParams::uniform(s.sig));
  auto closures = groundings(clauses, s.sig);
  auto infs = ground_inferences(kbo, Selection::None, closures);
  bool gsup = false;
  for (const GroundInference& g : infs) {
    if (g.rule == GroundRule::Sup && to_string(g.conclusion, s.sig) == "a != a") gsup = true;
  }
  CHECK(gsup);

  Syntax s2;
  std::vector<ClausePtr> refl = {s2.clause({"a = a"})};
  Kbo kbo2(KboParams::uniform(s2.sig));
  CHECK(ground_inferences(kbo2, Selection::None, groundings(refl, s2.sig)).empty());
}

TEST_CASE("ex1 groundings contain the lifted Sup instance") {
  Problem p = parse_file(corpus_file("ex1.p"));
  Kbo kbo(KboParams::uniform(p.signature));
  auto closures = groundings(p.clauses(), p.signature);
  auto infs = ground_inferences(kbo, Selection::AllNegative, closures);
  const Signature& sig = p.signature;
  bool found = false;
  for (const GroundInference& g : infs) {
    if (g.rule != GroundRule::Sup || to_string(g.conclusion, sig) != "t != t") continue;
    std::string c = to_string(closures[g.premises[1]].literals, sig);
    if (c == "f(g(b),g(g(b))) != t") found = true;
  }
  CHECK(found);
}

TEST_CASE("valid ground instances of a delayed inference") {
  Syntax s;
  ClausePtr c = s.clause({"f(X,g(X)) != t"});
  ClausePtr d = s.clause({"f(g(b),Y) = t"});
  Kbo kbo(KboParams::uniform(s.sig));
  Calculus calc(kbo, Selection::AllNegative);
  auto inf = calc.sup(d, {0, 0}, c, {0, 0}, Position{});
  REQUIRE(inf);
  // D keeps Y as variable 0; C's X becomes variable 1.
  Substitution theta;
  theta.bind(Term::var(0), s.t("g(g(b))"));
  theta.bind(Term::var(1), s.t("g(b)"));
  CHECK(is_valid_ground_instance(kbo, Selection::AllNegative, inf->record, theta));
  std::vector<Literal> ground = delsup::apply(theta, inf->conclusion);
  for (std::size_t i = ground.size() - inf->constraint_count; i < ground.size(); ++i) {
    CHECK(ground[i].trivial());
  }

  Substitution wrong;
  wrong.bind(Term::var(0), s.t("b"));
  wrong.bind(Term::var(1), s.t("b"));
  CHECK_FALSE(is_valid_ground_instance(kbo, Selection::AllNegative, inf->record, wrong));
}

TEST_CASE("lifting holds on the worked examples") {
  for (const char* name : {"ex1.p", "ex2.p", "intro.p"}) {
    for (Selection sel : {Selection::None, Selection::AllNegative}) {
      CAPTURE(name);
      Problem p = parse_file(corpus_file(name));
      Kbo kbo(KboParams::uniform(p.signature));
      LiftingReport r = check_lifting(p.clauses(), p.signature, kbo, sel);
      CHECK(r.ok());
      CHECK(r.ground_inferences > 0);
      CHECK(r.lifted + r.exempt == r.ground_inferences);
    }
  }
  Syntax s;
  std::vector<ClausePtr> ground = {s.clause({"f(a) = b"}), s.clause({"f(a) != b", "a = c"})};
  Kbo kbo(KboParams::uniform(s.sig));
  CHECK(check_lifting(ground, s.sig, kbo, Selection::None).ok());
}

TEST_CASE("property: lifting on small random clause sets") {
  Random rng(81);
  TermSpace space = TermSpace::make({{"f", 1}, {"g", 2}, {"a", 0}, {"b", 0}});
  TermShape shape;
  shape.depth = 2;
  shape.vars = 2;
  Kbo kbo(KboParams::uniform(space.sig));
  std::size_t inferences = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<ClausePtr> clauses;
    for (std::size_t i = 0, n = 1 + rng.below(3); i < n; ++i) {
      clauses.push_back(random_clause(rng, space, shape, 2));
    }
    for (Selection sel : {Selection::None, Selection::AllNegative}) {
      GroundingOptions opts;
      opts.depth = 1;
      LiftingReport r = check_lifting(clauses, space.sig, kbo, sel, opts);
      for (const std::string& v : r.violations) MESSAGE(v);
      REQUIRE(r.ok());
      inferences += r.ground_inferences;
    }
  }
  CHECK(inferences > 0);
}
