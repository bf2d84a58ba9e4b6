#include "helpers.hpp"

#include "delsup/calculus.hpp"

using namespace delsup;
using namespace delsup::testing;

namespace {

Calculus calculus_for(const Signature& sig, Selection sel = Selection::None) {
  return Calculus(Kbo(KboParams::uniform(sig)), sel);
}

Calculus calculus_with(const Syntax& s, const std::vector<std::string>& greatest_first,
                       Selection sel = Selection::None) {
  std::vector<SymbolId> order;
  for (const std::string& name : greatest_first) {
    std::vector<SymbolId> all = s.sig.find_all(name);
    REQUIRE(all.size() == 1);
    order.push_back(all[0]);
  }
  return Calculus(Kbo(KboParams::with_order(s.sig, order)), sel);
}

std::string printed(const Syntax& s, const Inference& inf) { return s.str(inf.conclusion); }

}  // namespace

TEST_CASE("Sup pairs arguments into constraints") {
  Syntax s;
  ClausePtr c = s.clause({"f(X,g(X)) != t"});
  ClausePtr d = s.clause({"f(g(b),Y) = t"});
  Calculus calc = calculus_for(s.sig, Selection::AllNegative);
  auto inf = calc.sup(d, {0, 0}, c, {0, 0}, Position{});
  REQUIRE(inf);
  CHECK(inf->record.rule == Rule::Sup);
  CHECK(inf->constraint_count == 2);
  CHECK(variants(inf->conclusion, s.lits({"t != t", "X != g(b)", "g(X) != Y"})));
  CHECK(inf->without_constraints().size() == 1);
  CHECK(inf->without_constraints()[0].trivial());

  Syntax s2;
  ClausePtr c2 = s2.clause({"f(g(a,X)) != t"});
  ClausePtr d2 = s2.clause({"f(g(a,b)) = t"});
  auto inf2 = calculus_for(s2.sig).sup(d2, {0, 0}, c2, {0, 0}, Position{});
  REQUIRE(inf2);
  CHECK(variants(inf2->conclusion, s2.lits({"t != t", "g(a,b) != g(a,X)"})));

  // Rewriting at g(a,X) (position 1) pairs the inner arguments instead.
  auto inner = calculus_for(s2.sig).sup(d2, {0, 0}, c2, {0, 0}, Position{{1}});
  CHECK_FALSE(inner);  // f-headed equation, g-headed target
}

TEST_CASE("Sup respects the ordering conditions") {
  Syntax s;
  ClausePtr d = s.clause({"a = b"});
  ClausePtr c = s.clause({"f(a) = c"});
  Calculus b_big = calculus_with(s, {"f", "b", "a", "c"});
  Calculus a_big = calculus_with(s, {"f", "a", "b", "c"});
  CHECK_FALSE(b_big.sup(d, {0, 0}, c, {0, 0}, Position{{1}}));
  auto ok = a_big.sup(d, {0, 0}, c, {0, 0}, Position{{1}});
  REQUIRE(ok);
  CHECK(variants(ok->conclusion, s.lits({"f(b) = c"})));
  CHECK(ok->constraint_count == 0);
  // Target must not be a variable or have a different head.
  ClausePtr cv = s.clause({"f(X) = c"});
  CHECK_FALSE(a_big.sup(d, {0, 0}, cv, {0, 0}, Position{{1}}));
  CHECK_FALSE(a_big.sup(d, {0, 0}, c, {0, 0}, Position{}));
}

TEST_CASE("VSup rewrites with a variable equation") {
  Syntax s;
  ClausePtr d = s.clause({"X = c"});
  ClausePtr c = s.clause({"f(a,c) != t"});
  Calculus calc = calculus_with(s, {"f", "a", "t", "c"});
  auto inf = calc.vsup(d, {0, 0}, c, {0, 0}, Position{{1}});
  REQUIRE(inf);
  CHECK(inf->record.rule == Rule::VSup);
  CHECK(printed(s, *inf) == "f(c,c) != t");
  CHECK(calc.superpose(CalculusMode::Delayed, d, {0, 0}, c, {0, 0}, Position{{1}})->record.rule ==
        Rule::VSup);

  // Not at a variable position, and not when c is the greater constant.
  ClausePtr cx = s.clause({"f(Y,c) != t"});
  CHECK_FALSE(calc.vsup(d, {0, 0}, cx, {0, 0}, Position{{1}}));
  Calculus c_big = calculus_with(s, {"f", "c", "a", "t"});
  CHECK_FALSE(c_big.vsup(d, {0, 0}, c, {0, 0}, Position{{1}}));

  // X = g(X) never rewrites: the instance of the right side is bigger.
  Syntax s2;
  ClausePtr dg = s2.clause({"X = g(X)"});
  ClausePtr target = s2.clause({"f(a,c) != t"});
  Calculus calc2 = calculus_for(s2.sig);
  CHECK(calc2.binary_inferences(CalculusMode::Delayed, dg, target).empty());
}

TEST_CASE("EqFact with pinned precedence") {
  Syntax s;
  ClausePtr c = s.clause({"f(a) = b", "f(a) = c"});
  Calculus calc = calculus_with(s, {"f", "c", "b", "a"});
  auto inf = calc.eq_fact(c, {1, 0}, {0, 0});
  REQUIRE(inf);
  CHECK(variants(inf->conclusion, s.lits({"c != b", "f(a) = c", "a != a"})));
  CHECK(inf->constraint_count == 1);
  // f(a) = b is not maximal once c > b.
  CHECK_FALSE(calc.eq_fact(c, {0, 0}, {1, 0}));

  Syntax s2;
  ClausePtr g = s2.clause({"g(X) = X", "g(Y) = Y"});
  auto inf2 = calculus_for(s2.sig).eq_fact(g, {1, 0}, {0, 0});
  REQUIRE(inf2);
  CHECK(variants(inf2->conclusion, s2.lits({"Y != X", "g(Y) = Y", "X != Y"})));

  Syntax s3;
  ClausePtr heads = s3.clause({"a = b", "c = d"});
  Calculus calc3 = calculus_for(s3.sig);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      CHECK_FALSE(calc3.eq_fact(heads, {0, a}, {1, b}));
      CHECK_FALSE(calc3.eq_fact(heads, {1, a}, {0, b}));
    }
  }
}

TEST_CASE("VEqFact unifies a variable side") {
  Syntax s;
  ClausePtr c = s.clause({"X = a", "b = a"});
  Calculus calc = calculus_with(s, {"b", "a"});
  auto inf = calc.veq_fact(c, {0, 0}, {1, 0});
  REQUIRE(inf);
  CHECK(inf->record.rule == Rule::VEqFact);
  CHECK(variants(inf->conclusion, s.lits({"a != a", "b = a"})));

  Syntax s2;
  ClausePtr c2 = s2.clause({"X = a", "Y = b"});
  Calculus calc2 = calculus_with(s2, {"b", "a"});
  auto inf2 = calc2.veq_fact(c2, {1, 0}, {0, 0});
  REQUIRE(inf2);
  CHECK(variants(inf2->conclusion, s2.lits({"b != a", "Y = b"})));

  Syntax s3;
  ClausePtr occurs = s3.clause({"X = a", "f(X) = b"});
  CHECK_FALSE(calculus_for(s3.sig).veq_fact(occurs, {0, 0}, {1, 0}));
}

TEST_CASE("Decompose") {
  Syntax s;
  ClausePtr c = s.clause({"t != t", "g(a,X) != g(a,b)"});
  Calculus calc = calculus_for(s.sig, Selection::AllNegative);
  auto inf = calc.decompose(c, 1);
  REQUIRE(inf);
  CHECK(variants(inf->conclusion, s.lits({"t != t", "a != a", "b != X"})));
  CHECK(inf->constraint_count == 2);

  CHECK_FALSE(calc.decompose(s.clause({"f(a) != f(a)"}), 0));
  CHECK_FALSE(calc.decompose(s.clause({"f(a) != h(a)"}), 0));
  CHECK_FALSE(calc.decompose(s.clause({"f(a) = f(b)"}), 0));
}

TEST_CASE("Bind") {
  Syntax s;
  ClausePtr c = s.clause({"X != g(b)", "g(X) != Y"});
  Calculus calc = calculus_for(s.sig, Selection::AllNegative);
  auto inf = calc.bind(c, 0);
  REQUIRE(inf);
  CHECK(variants(inf->conclusion, s.lits({"g(g(b)) != Y"})));
  ClausePtr c5 = inf->to_clause();
  auto last = calc.bind(c5, 0);
  REQUIRE(last);
  CHECK(last->conclusion.empty());
  CHECK_FALSE(calc.bind(s.clause({"X != f(X)"}), 0));
  CHECK_FALSE(calc.bind(s.clause({"X = a"}), 0));
}

TEST_CASE("ReflDel") {
  Syntax s;
  ClausePtr c = s.clause({"t != t", "X != g(b)", "g(X) != Y"});
  Calculus calc = calculus_for(s.sig, Selection::AllNegative);
  auto inf = calc.refl_del(c, 0);
  REQUIRE(inf);
  CHECK(variants(inf->conclusion, s.lits({"X != g(b)", "g(X) != Y"})));

  ClausePtr cur = s.clause({"t != t", "c != c", "c != c"});
  for (int step = 0; step < 3; ++step) {
    auto next = calc.refl_del(cur, 0);
    REQUIRE(next);
    cur = next->to_clause();
  }
  CHECK(cur->empty());
  CHECK_FALSE(calc.refl_del(s.clause({"a != b"}), 0));
}

TEST_CASE("standard superposition rules") {
  Syntax s;
  ClausePtr c = s.clause({"f(g(a,X)) != t"});
  ClausePtr d = s.clause({"f(g(a,b)) = t"});
  Calculus calc = calculus_for(s.sig);
  auto inf = calc.std_sup(d, {0, 0}, c, {0, 0}, Position{});
  REQUIRE(inf);
  CHECK(printed(s, *inf) == "t != t");
  CHECK(inf->record.rule == Rule::StdSup);

  auto res = calc.eq_res(s.clause({"X != a"}), 0);
  REQUIRE(res);
  CHECK(res->conclusion.empty());
  CHECK_FALSE(calc.eq_res(s.clause({"f(X) != g(X)"}), 0));
  CHECK_FALSE(calc.eq_res(s.clause({"X != f(X)"}), 0));

  ClausePtr fact = s.clause({"f(X) = a", "f(b) = a"});
  auto f = calc.std_eq_fact(fact, {0, 0}, {1, 0});
  REQUIRE(f);
  CHECK(variants(f->conclusion, s.lits({"a != a", "f(b) = a"})));
}

TEST_CASE("unary inferences per mode") {
  Syntax s;
  ClausePtr c = s.clause({"f(X) != f(a)"});
  Calculus calc = calculus_for(s.sig);
  auto delayed = calc.unary_inferences(CalculusMode::Delayed, c);
  REQUIRE(delayed.size() == 1);
  CHECK(delayed[0].record.rule == Rule::Decompose);
  auto standard = calc.unary_inferences(CalculusMode::Standard, c);
  REQUIRE(standard.size() == 1);
  CHECK(standard[0].record.rule == Rule::EqRes);
  CHECK(standard[0].conclusion.empty());
}

namespace {

std::vector<Inference> all_inferences(const Calculus& calc, CalculusMode mode, const ClausePtr& d,
                                      const ClausePtr& c) {
  std::vector<Inference> out = calc.binary_inferences(mode, d, c);
  for (auto& inf : calc.binary_inferences(mode, c, d)) out.push_back(std::move(inf));
  for (auto& inf : calc.unary_inferences(mode, c)) out.push_back(std::move(inf));
  for (auto& inf : calc.unary_inferences(mode, d)) out.push_back(std::move(inf));
  return out;
}

}  // namespace

TEST_CASE("property: recorded inferences replay exactly") {
  Random rng(51);
  TermSpace space = TermSpace::make({{"f", 1}, {"g", 2}, {"a", 0}, {"b", 0}}, {{"p", 1}});
  TermShape shape;
  shape.depth = 2;
  shape.vars = 2;
  std::size_t replayed = 0;
  for (int trial = 0; trial < 400; ++trial) {
    ClausePtr d = random_clause(rng, space, shape, 2);
    ClausePtr c = random_clause(rng, space, shape, 3);
    for (Selection sel : {Selection::None, Selection::AllNegative}) {
      Calculus calc(Kbo(KboParams::uniform(space.sig)), sel);
      for (CalculusMode mode : {CalculusMode::Standard, CalculusMode::Delayed}) {
        for (const Inference& inf : all_inferences(calc, mode, d, c)) {
          auto again = calc.replay(inf.record);
          REQUIRE(again);
          REQUIRE(to_string(again->conclusion, space.sig) == to_string(inf.conclusion, space.sig));
          REQUIRE(again->constraint_count == inf.constraint_count);
          ++replayed;
        }
      }
    }
  }
  CHECK(replayed > 1000);
}

TEST_CASE("property: conclusions have no two-element countermodel") {
  Random rng(52);
  TermSpace space = TermSpace::make({{"f", 1}, {"g", 2}, {"a", 0}, {"b", 0}}, {{"p", 1}});
  TermShape shape;
  shape.depth = 2;
  shape.vars = 2;
  Random models(53);
  std::size_t checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    ClausePtr d = random_clause(rng, space, shape, 2);
    ClausePtr c = random_clause(rng, space, shape, 2);
    Calculus calc(Kbo(KboParams::uniform(space.sig)), Selection::None);
    for (CalculusMode mode : {CalculusMode::Standard, CalculusMode::Delayed}) {
      for (const Inference& inf : all_inferences(calc, mode, d, c)) {
        std::vector<std::vector<Literal>> premises;
        for (const ClausePtr& p : inf.record.premises) {
          premises.emplace_back(p->literals().begin(), p->literals().end());
        }
        REQUIRE(no_countermodel(space.sig, premises, inf.conclusion, models, 20));
        ++checked;
      }
    }
  }
  CHECK(checked > 300);
}
