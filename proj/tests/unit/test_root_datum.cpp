#include <doctest.h>

#include <hecke0/catalog.hpp>
#include <hecke0/root_datum.hpp>

using namespace hecke0;

TEST_CASE("catalog builds all data") {
  auto names = catalogNames();
  CHECK(names.size() == 8);
  for (const auto& n : names) {
    DatumPtr rd = catalogDatum(n);
    CHECK(rd->name() == n);
    // a datum also round-trips through its JSON form
    DatumPtr again = datumFromJson(catalogJson(n));
    CHECK(again->rank() == rd->rank());
    CHECK(again->numPositive() == rd->numPositive());
  }
}

TEST_CASE("root system counts") {
  struct Row { const char* name; int pos; int order; };
  for (Row r : {Row{"A1-sc", 1, 2}, Row{"A1-ad", 1, 2}, Row{"A1xA1", 2, 4},
                Row{"A2-sc", 3, 6}, Row{"A2-ad", 3, 6}, Row{"C2", 4, 8},
                Row{"G2", 6, 12}, Row{"GL2", 1, 2}}) {
    DatumPtr rd = catalogDatum(r.name);
    CHECK(rd->numPositive() == r.pos);
    CHECK(rd->order() == r.order);
  }
}

TEST_CASE("pairing axioms and reflections") {
  for (const auto& n : catalogNames()) {
    DatumPtr rd = catalogDatum(n);
    for (int i = 0; i < rd->numSimple(); ++i)
      CHECK(rd->pair(rd->simpleRoots()[i], rd->simpleCoroots()[i]) == 2);
    // each simple reflection has order 2 and length 1
    for (int i = 0; i < rd->numSimple(); ++i) {
      int s = rd->reflection(rd->rootIndex(rd->simpleRoots()[i]));
      CHECK(rd->w0Length(s) == 1);
      CHECK(rd->w0Multiply(s, s) == 0);
    }
    // the longest element is an involution of length numPositive
    int w0 = rd->longestElement();
    CHECK(rd->w0Length(w0) == rd->numPositive());
    CHECK(rd->w0Multiply(w0, w0) == 0);
  }
}

TEST_CASE("highest root dominates the positive roots") {
  for (const char* n : {"A2-sc", "C2", "G2"}) {
    DatumPtr rd = catalogDatum(n);
    REQUIRE(rd->components().size() == 1);
    const IVec& theta = rd->roots()[rd->highestRoots()[0]];
    // theta - alpha has nonnegative simple-root coordinates for every root
    IVec tc = rd->rootCoords()[rd->highestRoots()[0]];
    for (int r = 0; r < rd->numPositive(); ++r)
      for (size_t k = 0; k < tc.size(); ++k)
        CHECK(tc[k] >= rd->rootCoords()[r][k]);
    CHECK(rd->isDominant(QVec(theta.begin(), theta.end())));
  }
}

TEST_CASE("dominant representative round trip") {
  DatumPtr rd = catalogDatum("C2");
  for (int w = 0; w < rd->order(); ++w) {
    QVec v{Rat(3), Rat(-1)};
    QVec moved = rd->w0Act(w, v);
    auto [bar, z] = rd->dominantRep(moved);
    CHECK(rd->isDominant(bar));
    CHECK(rd->w0Act(z, moved) == bar);
  }
}

TEST_CASE("invalid data are rejected") {
  // affine (non-finite-type) Cartan matrix
  CHECK_THROWS_AS(datumFromJson(R"({"name":"bad","xRank":2,
    "pairing":[[1,0],[0,1]],
    "simpleRoots":[[2,-2],[-2,2]],
    "simpleCoroots":[[1,-1],[-1,1]]})"),
                  DatumError);
  // <alpha, alpha_vee> != 2
  CHECK_THROWS_AS(datumFromJson(R"({"name":"bad","xRank":1,
    "pairing":[[1]],"simpleRoots":[[1]],"simpleCoroots":[[1]]})"),
                  DatumError);
  CHECK_THROWS(datumFromJson("not json"));
}

TEST_CASE("J of a vector") {
  DatumPtr rd = catalogDatum("A2-ad");
  QVec zero{Rat(0), Rat(0)};
  CHECK(rd->jOfVector(zero) == std::vector<int>{0, 1});
  // J picks exactly the coroots pairing to zero
  QVec a0(rd->simpleRoots()[0].begin(), rd->simpleRoots()[0].end());
  auto J = rd->jOfVector(a0);
  for (int i = 0; i < rd->numSimple(); ++i) {
    bool inJ = std::find(J.begin(), J.end(), i) != J.end();
    CHECK(inJ == (rd->pair(rd->simpleRoots()[0], rd->simpleCoroots()[i]) == 0));
  }
}
