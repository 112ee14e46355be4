#include <doctest.h>

#include <hecke0/catalog.hpp>
#include <hecke0/cocenter.hpp>

using namespace hecke0;

TEST_CASE("commutators vanish in the cocenter") {
  for (const char* n : {"A1-sc", "A2-sc", "C2"}) {
    const Weyl& W = catalogDatum(n)->weylFull();
    Cocenter coc(W, 5);
    CHECK(coc.commutatorCheck(4) == 0);
  }
}

TEST_CASE("projection of a minimal element is its own class") {
  const Weyl& W = catalogDatum("A2-ad")->weylFull();
  Cocenter coc(W, 5);
  for (size_t i = 0; i < coc.classes().size(); ++i) {
    CocenterElt p = coc.project(heckeBasis(coc.classes()[i].rep, HeckeMode::Zero));
    REQUIRE(p.coeff.size() == 1);
    CHECK(p.coeff.begin()->first == int(i));
    CHECK(p.coeff.begin()->second == 1);
  }
}

TEST_CASE("projection is linear and sign-correct") {
  const Weyl& W = catalogDatum("A2-ad")->weylFull();
  Cocenter coc(W, 5);
  for (const auto& e : W.ball(4)) {
    SigmaResult s = sigmaOf(W, e);
    CocenterElt p = coc.project(heckeBasis(e, HeckeMode::Zero));
    REQUIRE(p.coeff.size() == 1);
    CHECK(coc.label(p.coeff.begin()->first) ==
          classLabel(coc.classes(), findClass(coc.classes(), s.cls.rep)));
    CHECK(p.coeff.begin()->second == s.sign);
    // psi(2 T_e - T_e) = psi(T_e)
    HeckeElt h = heckeSub(heckeScale(LaurentPoly(2), heckeBasis(e, HeckeMode::Zero)),
                          heckeBasis(e, HeckeMode::Zero));
    CHECK(coc.project(h) == p);
  }
}

TEST_CASE("projection kills products in either order equally") {
  const Weyl& W = catalogDatum("A1-sc")->weylFull();
  Cocenter coc(W, 6);
  auto ball = W.ball(3);
  for (const auto& a : ball)
    for (const auto& b : ball) {
      HeckeElt ab = tMultiply(W, heckeBasis(a, HeckeMode::Zero), heckeBasis(b, HeckeMode::Zero));
      HeckeElt ba = tMultiply(W, heckeBasis(b, HeckeMode::Zero), heckeBasis(a, HeckeMode::Zero));
      CHECK(coc.project(ab) == coc.project(ba));
    }
}

TEST_CASE("non-supersingular indicator matches the Newton criterion") {
  DatumPtr rd = catalogDatum("C2");
  const Weyl& W = rd->weylFull();
  Cocenter coc(W, 4);
  std::vector<int> F0{0, 1};
  for (size_t i = 0; i < coc.classes().size(); ++i)
    CHECK(coc.nssIndicator(int(i)) == (rd->jOfVector(coc.classes()[i].newton) != F0));
  // the identity class has nu = 0, hence J = F0: not nss
  CHECK(!coc.nssIndicator(0));
  auto basis = coc.nssBasisUpTo();
  for (const auto& v : basis) CHECK(!v.isZero());
}
