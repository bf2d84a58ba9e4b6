#include "helpers.hpp"

#include <set>

#include "delsup/index.hpp"
#include "delsup/unify.hpp"

using namespace delsup;
using namespace delsup::testing;

TEST_CASE("fingerprint features") {
  Syntax s;
  Term t = s.t("f(g(a,X),b)");
  CHECK(feature(t, Position{}) == static_cast<std::int32_t>(s.sym("f", 2)));
  CHECK(feature(t, Position{{1}}) == static_cast<std::int32_t>(s.sym("g", 2)));
  CHECK(feature(t, Position{{1, 2}}) == kAtVar);
  CHECK(feature(t, Position{{2, 1}}) == kNonexistent);
  CHECK(feature(s.t("X"), Position{}) == kAtVar);
  CHECK(feature(s.t("X"), Position{{1, 1}}) == kBelowVar);
  CHECK(feature(s.t("h(X)"), Position{{1, 2}}) == kBelowVar);
  CHECK(feature(s.t("h(X)"), Position{{2}}) == kNonexistent);
}

TEST_CASE("feature compatibility table") {
  // Symbols match only themselves or a variable marker; N matches N or A.
  CHECK(features_compatible(3, 3));
  CHECK_FALSE(features_compatible(3, 4));
  CHECK(features_compatible(3, kAtVar));
  CHECK(features_compatible(3, kBelowVar));
  CHECK_FALSE(features_compatible(3, kNonexistent));
  CHECK(features_compatible(kAtVar, kBelowVar));
  CHECK_FALSE(features_compatible(kAtVar, kNonexistent));
  CHECK(features_compatible(kBelowVar, kNonexistent));
  CHECK(features_compatible(kNonexistent, kNonexistent));
  for (std::int32_t a : {3, kAtVar, kBelowVar, kNonexistent}) {
    for (std::int32_t b : {3, 5, kAtVar, kBelowVar, kNonexistent}) {
      CHECK(features_compatible(a, b) == features_compatible(b, a));
    }
  }
}

TEST_CASE("top-symbol index insert, retrieve and remove") {
  TopSymbolIndex<int> index;
  auto h1 = index.insert(3, true, 1);
  index.insert(3, false, 2);
  index.insert(4, true, 3);
  std::vector<int> seen;
  index.retrieve(3, true, [&](int e) { seen.push_back(e); });
  CHECK(seen == std::vector<int>{1});
  seen.clear();
  index.retrieve(3, [&](int e) { seen.push_back(e); });
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<int>{1, 2});
  CHECK(index.remove(h1));
  CHECK_FALSE(index.remove(h1));
  seen.clear();
  index.retrieve(3, true, [&](int e) { seen.push_back(e); });
  CHECK(seen.empty());
  CHECK(index.size() == 2);
}

TEST_CASE("property: fingerprints never reject a unifiable pair") {
  Random rng(61);
  TermSpace space = TermSpace::five();
  TermShape shape;
  shape.depth = 4;
  int unifiable = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    Term a = random_term(rng, space, shape);
    Term b = shift_vars(random_term(rng, space, shape), 3);
    if (!oracle_unify(a, b)) continue;
    ++unifiable;
    REQUIRE(unification_compatible(fingerprint(a), fingerprint(b)));
  }
  CHECK(unifiable > 1000);
}

TEST_CASE("property: top-symbol candidates contain fingerprint candidates contain unifiable ones") {
  Random rng(62);
  TermSpace space = TermSpace::five();
  TermShape shape;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Term> stored;
    TopSymbolIndex<std::size_t> top;
    FingerprintIndex<std::size_t> fp;
    for (std::size_t i = 0; i < 30; ++i) {
      Term t = random_term(rng, space, shape);
      if (t.is_var()) continue;
      stored.push_back(t);
      top.insert(t.functor(), true, stored.size() - 1);
      fp.insert(t, stored.size() - 1);
    }
    Term q = shift_vars(random_term(rng, space, shape), 3);
    if (q.is_var()) continue;
    std::set<std::size_t> by_top, by_fp, unifiable;
    top.retrieve(q.functor(), true, [&](std::size_t i) { by_top.insert(i); });
    fp.retrieve(q, [&](std::size_t i) { by_fp.insert(i); });
    for (std::size_t i = 0; i < stored.size(); ++i) {
      if (mgu(stored[i], q).ok()) unifiable.insert(i);
    }
    REQUIRE(std::includes(by_top.begin(), by_top.end(), by_fp.begin(), by_fp.end()));
    REQUIRE(std::includes(by_fp.begin(), by_fp.end(), unifiable.begin(), unifiable.end()));
  }
}

TEST_CASE("property: fingerprint index survives removal") {
  Random rng(63);
  TermSpace space = TermSpace::five();
  TermShape shape;
  FingerprintIndex<std::size_t> fp;
  std::vector<Term> stored;
  std::vector<FingerprintIndex<std::size_t>::Handle> handles;
  for (std::size_t i = 0; i < 200; ++i) {
    stored.push_back(random_term(rng, space, shape));
    handles.push_back(fp.insert(stored.back(), i));
  }
  std::set<std::size_t> removed;
  for (std::size_t i = 0; i < 200; i += 3) {
    REQUIRE(fp.remove(handles[i]));
    removed.insert(i);
  }
  CHECK(fp.size() == 200 - removed.size());
  for (int q = 0; q < 50; ++q) {
    Term query = shift_vars(random_term(rng, space, shape), 3);
    std::set<std::size_t> got;
    fp.retrieve(query, [&](std::size_t i) { got.insert(i); });
    for (std::size_t i : got) REQUIRE(removed.count(i) == 0);
    for (std::size_t i = 0; i < stored.size(); ++i) {
      if (!removed.count(i) && mgu(stored[i], query).ok()) REQUIRE(got.count(i) == 1);
    }
  }
}
