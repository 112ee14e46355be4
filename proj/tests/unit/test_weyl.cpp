#include <doctest.h>

#include <hecke0/catalog.hpp>
#include <hecke0/weyl.hpp>

#include <set>

using namespace hecke0;

namespace {
const std::vector<std::string> kEnumerable = {"A1-sc", "A1-ad", "A1xA1", "A2-sc",
                                              "A2-ad", "C2",    "G2"};
}

TEST_CASE("length formula agrees with the hyperplane oracle and word length") {
  for (const auto& n : kEnumerable) {
    DatumPtr rd = catalogDatum(n);
    const Weyl& W = rd->weylFull();
    for (const auto& level : W.ballByLength(5))
      for (const auto& e : level) {
        Int l = W.length(e);
        CHECK(l == W.lengthHyperplanes(e));
        AffineWord w = W.reducedWord(e);
        CHECK(Int(w.letters.size()) == l);
        CHECK(W.evalWord(w) == e);
      }
  }
}

TEST_CASE("group arithmetic") {
  DatumPtr rd = catalogDatum("C2");
  const Weyl& W = rd->weylFull();
  auto ball = W.ball(3);
  for (const auto& a : ball) {
    CHECK(W.multiply(a, W.inverse(a)) == W.identity());
    CHECK(W.power(a, 3) == W.multiply(a, W.multiply(a, a)));
    CHECK(W.power(a, -2) == W.inverse(W.multiply(a, a)));
    CHECK(W.length(W.inverse(a)) == W.length(a));
    for (const auto& b : ball) {
      // translations embed homomorphically
      CHECK(W.multiply(W.translation(a.lambda), W.translation(b.lambda)) ==
            W.translation(IVec{a.lambda[0] + b.lambda[0], a.lambda[1] + b.lambda[1]}));
    }
  }
}

TEST_CASE("generators have length one and square to the identity") {
  for (const auto& n : kEnumerable) {
    const Weyl& W = catalogDatum(n)->weylFull();
    for (int k = 0; k < W.numGenerators(); ++k) {
      const AffineElement& s = W.generator(k);
      CHECK(W.length(s) == 1);
      CHECK(W.multiply(s, s) == W.identity());
      CHECK(W.generatorIndexOf(s) == k);
    }
  }
}

TEST_CASE("coset decomposition is a length-additive bijection") {
  DatumPtr rd = catalogDatum("A2-ad");
  const Weyl& W = rd->weylFull();
  for (std::vector<int> J : {std::vector<int>{}, {0}, {1}, {0, 1}}) {
    for (const auto& e : W.ball(4)) {
      auto cs = W.cosetDecompose(e, J);
      CHECK(W.multiply(W.fromFinite(cs.d), cs.u) == e);
      CHECK(rd->weyl(J).inGroup(cs.u));
      if (W.isJPositive(cs.u, J))
        CHECK(W.length(e) == Int(rd->w0Length(cs.d)) + W.length(cs.u));
    }
  }
}

TEST_CASE("J-positive elements are closed under product") {
  DatumPtr rd = catalogDatum("C2");
  const Weyl& W = rd->weylFull();
  std::vector<int> J{0};
  const Weyl& WJ = rd->weyl(J);
  std::vector<AffineElement> pos;
  for (const auto& e : W.ball(3))
    if (WJ.inGroup(e) && W.isJPositive(e, J)) pos.push_back(e);
  CHECK(!pos.empty());
  for (const auto& a : pos)
    for (const auto& b : pos) CHECK(W.isJPositive(W.multiply(a, b), J));
}

TEST_CASE("Omega structure") {
  struct Row { const char* name; size_t nGens; size_t size; };
  for (Row r : {Row{"A1-sc", 1, 2}, Row{"A1-ad", 0, 1}, Row{"A1xA1", 2, 4},
                Row{"A2-sc", 1, 3}, Row{"A2-ad", 0, 1}, Row{"C2", 1, 2},
                Row{"G2", 0, 1}}) {
    const Weyl& W = catalogDatum(r.name)->weylFull();
    CHECK(W.omegaFinite());
    CHECK(W.omegaGens().size() == r.nGens);
    CHECK(W.omegaElements().size() == r.size);
    for (const auto& g : W.omegaGens()) {
      CHECK(W.length(g.lift) == 0);
      CHECK(g.order > 0);
      CHECK(W.power(g.lift, g.order) == W.identity());
      // conjugation permutes S_aff
      auto perm = W.conjugationOnGenerators(g.lift);
      std::vector<bool> seen(perm.size(), false);
      for (int p : perm) {
        CHECK(!seen[size_t(p)]);
        seen[size_t(p)] = true;
      }
    }
  }
  const Weyl& gl2 = catalogDatum("GL2")->weylFull();
  CHECK(!gl2.omegaFinite());
  REQUIRE(gl2.omegaGens().size() == 1);
  CHECK(gl2.omegaGens()[0].order == 0);
}

TEST_CASE("Demazure product matches the zero-mode Hecke product") {
  DatumPtr rd = catalogDatum("A2-sc");
  const Weyl& W = rd->weylFull();
  auto ball = W.ball(3);
  for (const auto& a : ball)
    for (const auto& b : ball) {
      AffineElement d = W.demazureProduct(a, b);
      CHECK(W.length(d) >= std::max(W.length(a), W.length(b)));
      CHECK(W.length(d) <= W.length(a) + W.length(b));
      // idempotent-monoid law: a * a = a for generators
      CHECK(W.demazureProduct(d, W.identity()) == d);
    }
  for (int k = 0; k < W.numGenerators(); ++k)
    CHECK(W.demazureProduct(W.generator(k), W.generator(k)) == W.generator(k));
}

TEST_CASE("support is closed under the Omega action") {
  const Weyl& W = catalogDatum("A2-sc")->weylFull();
  for (const auto& e : W.ball(4)) {
    auto supp = W.support(e);
    AffineElement tau = W.reducedWord(e).tau;
    auto perm = W.conjugationOnGenerators(tau);
    for (int s : supp)
      CHECK(std::find(supp.begin(), supp.end(), perm[size_t(s)]) != supp.end());
  }
}

TEST_CASE("finite-type subsets and longest elements") {
  const Weyl& W = catalogDatum("C2")->weylFull();
  CHECK(W.numGenerators() == 3);
  CHECK(W.finiteType({}));
  CHECK(W.finiteType({0, 1}));
  CHECK(!W.finiteType({0, 1, 2}));
  for (std::vector<int> K : {std::vector<int>{0}, {0, 1}, {1, 2}}) {
    AffineElement w = W.longestOf(K);
    auto elts = W.subgroupElements(K);
    REQUIRE(elts);
    for (const auto& z : *elts) CHECK(W.length(z) <= W.length(w));
  }
}

TEST_CASE("ball enumeration is exhaustive and duplicate-free") {
  const Weyl& W = catalogDatum("A1xA1")->weylFull();
  auto byLen = W.ballByLength(4);
  REQUIRE(byLen.size() == 5);
  std::set<AffineElement> all;
  for (size_t l = 0; l < byLen.size(); ++l)
    for (const auto& e : byLen[l]) {
      CHECK(W.length(e) == Int(l));
      CHECK(all.insert(e).second);
    }
  // closure: every one-step product stays inside the next ball
  auto next = W.ball(5);
  std::set<AffineElement> nextSet(next.begin(), next.end());
  for (const auto& e : W.ball(4))
    for (int k = 0; k < W.numGenerators(); ++k)
      CHECK(nextSet.count(W.multiply(e, W.generator(k))) == 1);
}
