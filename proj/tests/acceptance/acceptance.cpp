// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. All arithmetic is exact; bounds follow the shipped defaults.

#include <hecke0/catalog.hpp>
#include <hecke0/cocenter.hpp>
#include <hecke0/reps.hpp>

#include <chrono>
#include <cstdio>
#include <random>

using namespace hecke0;

namespace {

const std::vector<std::string> kData = {"A1-sc", "A1-ad", "A1xA1", "A2-sc",
                                        "A2-ad", "C2",    "G2"};

bool gAllOk = true;

void report(int num, const char* what, bool ok, double secs) {
  std::printf("criterion %2d (%s): %s  [%.1fs]\n", num, what, ok ? "pass" : "FAIL", secs);
  if (!ok) gAllOk = false;
}

template <typename F>
void run(int num, const char* what, F f) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = f();
  } catch (const std::exception& e) {
    std::printf("  exception: %s\n", e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(num, what, ok, secs);
}

// 1. closed length formula == hyperplane count == reduced-word length, l <= 8
bool lengthAgreement() {
  bool ok = true;
  for (const auto& n : kData) {
    const Weyl& W = catalogDatum(n)->weylFull();
    for (const auto& level : W.ballByLength(8))
      for (const auto& e : level) {
        Int l = W.length(e);
        ok = ok && l == W.lengthHyperplanes(e) && l == Int(W.reducedWord(e).letters.size());
      }
  }
  return ok;
}

// 2. quadratic/braid on generator matrices and symbolic products; 10^4
//    random associativity triples with factors of length <= 5
bool heckeRelations() {
  bool ok = true;
  for (const auto& n : kData) {
    const Weyl& W = catalogDatum(n)->weylFull();
    for (int s = 0; s < W.numGenerators(); ++s) {
      for (HeckeMode mode : {HeckeMode::Zero, HeckeMode::Generic}) {
        HeckeElt ts = heckeBasis(W.generator(s), mode);
        HeckeElt sq = tMultiply(W, ts, ts);
        LaurentPoly qm1 =
            (mode == HeckeMode::Generic) ? LaurentPoly::q(1) - LaurentPoly(1) : LaurentPoly(-1);
        HeckeElt rhs = heckeScale(qm1, ts);
        if (mode == HeckeMode::Generic)
          rhs = heckeAdd(rhs, heckeScale(LaurentPoly::q(1), heckeBasis(W.identity(), mode)));
        ok = ok && sq == rhs;
      }
      for (int t = s + 1; t < W.numGenerators(); ++t) {
        AffineElement st = W.multiply(W.generator(s), W.generator(t));
        AffineElement p = st;
        int m = 0;
        for (int k = 1; k <= 8 && m == 0; ++k) {
          if (p == W.identity()) m = k;
          p = W.multiply(p, st);
        }
        if (m == 0) continue;
        for (HeckeMode mode : {HeckeMode::Zero, HeckeMode::Generic}) {
          HeckeElt a = heckeBasis(W.identity(), mode), b = a;
          for (int i = 0; i < m; ++i) {
            a = tMultiply(W, a, heckeBasis(W.generator((i % 2 == 0) ? s : t), mode));
            b = tMultiply(W, b, heckeBasis(W.generator((i % 2 == 0) ? t : s), mode));
          }
          ok = ok && a == b;
        }
      }
    }
  }
  // generator matrices of induced modules
  for (const char* n : {"A1-sc", "A2-ad"}) {
    DatumPtr rd = catalogDatum(n);
    ClassTable table = buildClassTable(rd->weylFull(), 3);
    for (const auto& c : finiteCandidates(*rd, table)) ok = ok && verifyRelations(c.pi) == 0;
  }
  std::mt19937 rng(12345);
  for (const char* n : {"A2-ad", "C2"}) {
    const Weyl& W = catalogDatum(n)->weylFull();
    auto ball = W.ball(5);
    std::uniform_int_distribution<size_t> pick(0, ball.size() - 1);
    for (int trial = 0; trial < 5000; ++trial) {
      HeckeMode mode = (trial % 4 == 0) ? HeckeMode::Generic : HeckeMode::Zero;
      HeckeElt a = heckeBasis(ball[pick(rng)], mode);
      HeckeElt b = heckeBasis(ball[pick(rng)], mode);
      HeckeElt c = heckeBasis(ball[pick(rng)], mode);
      ok = ok && tMultiply(W, tMultiply(W, a, b), c) == tMultiply(W, a, tMultiply(W, b, c));
    }
  }
  return ok;
}

// 3. psi kills commutators with generators and Omega elements, l <= 6
bool cocenterKernel() {
  bool ok = true;
  for (const char* n : {"A1-sc", "A2-ad"}) {
    const Weyl& W = catalogDatum(n)->weylFull();
    Cocenter coc(W, 7);
    ok = ok && coc.commutatorCheck(6) == 0;
  }
  return ok;
}

// 4. Sigma is strategy independent and matches the maximality oracle, l <= 5
bool psiPathIndependence() {
  const Weyl& W = catalogDatum("A2-ad")->weylFull();
  auto classes = enumerateMinClasses(W, 5);
  bool ok = true;
  for (const auto& e : W.ball(5)) {
    SigmaResult a = sigmaOf(W, e, SigmaStrategy::FirstDrop);
    SigmaResult b = sigmaOf(W, e, SigmaStrategy::LastDrop);
    SigmaResult c = sigmaOf(W, e, SigmaStrategy::ReverseScan);
    SigmaResult d = sigmaByMaximality(W, classes, e);
    ok = ok && a.cls.rep == b.cls.rep && a.cls.rep == c.cls.rep && a.cls.rep == d.cls.rep &&
         a.sign == b.sign && a.sign == c.sign && a.sign == d.sign;
  }
  return ok;
}

Int powerThreshold(const RootDatum& rd, const IVec& lambda) {
  Int mx = 0;
  for (int i = 0; i < rd.numSimple(); ++i) {
    Int p = rd.pair(lambda, rd.simpleCoroots()[i]);
    mx = std::max(mx, p < 0 ? -p : p);
  }
  return Int(rd.order()) * (1 + mx);
}

// 5. T_{wy}^n = (-1)^{n l(w) - l(w_K)} T_{w_K y^n} over the window
bool wkWindow() {
  bool ok = true;
  for (const auto& name : kData) {
    DatumPtr rd = catalogDatum(name);
    const Weyl& W = rd->weylFull();
    Int n0 = rd->order();
    for (const auto& cls : enumerateMinClasses(W, 5)) {
      StandardRep r = standardRepresentative(W, cls);
      AffineElement wy = W.multiply(r.w, r.y);
      AffineElement wK = r.K.empty() ? W.identity() : W.longestOf(r.K);
      Int lw = W.length(r.w), lwK = W.length(wK);
      Int n = powerThreshold(*rd, r.y.lambda);
      HeckeElt pw = tPower(W, wy, n, HeckeMode::Zero);
      HeckeElt step = heckeBasis(wy, HeckeMode::Zero);
      for (Int k = n; k <= n + n0; ++k) {
        AffineElement target = W.multiply(wK, W.power(r.y, k));
        HeckeElt want = heckeBasis(target, HeckeMode::Zero,
                                   LaurentPoly(((k * lw - lwK) % 2 == 0) ? 1 : -1));
        ok = ok && pw == want;
        pw = tMultiply(W, pw, step);
      }
    }
  }
  return ok;
}

std::vector<int> minimalCosetRepsLeft(const RootDatum& rd, const std::vector<int>& J) {
  // {}^J W0: u with l(s_j u) > l(u) for all j in J
  std::vector<int> out;
  for (int u = 0; u < rd.order(); ++u) {
    bool min = true;
    for (int j : J) {
      int sj = rd.reflection(rd.rootIndex(rd.simpleRoots()[size_t(j)]));
      if (rd.w0Length(rd.w0Multiply(sj, u)) < rd.w0Length(u)) min = false;
    }
    if (min) out.push_back(u);
  }
  return out;
}

// 6. the two length identities for w_Gamma x^n, and w_Gamma x^n ~~ w_K y^n
bool uxWindow() {
  bool ok = true;
  for (const char* name : {"A2-ad", "C2"}) {
    DatumPtr rd = catalogDatum(name);
    const Weyl& W = rd->weylFull();
    Int n0 = rd->order();
    for (const auto& cls : enumerateMinClasses(W, 5)) {
      StandardRep r = standardRepresentative(W, cls);
      StandardPair p = standardPairFromRep(W, r);
      const Weyl& WJ = rd->weyl(p.J);
      AffineElement wG = p.gamma.empty() ? W.identity() : WJ.longestOf(p.gamma);
      AffineElement wK = r.K.empty() ? W.identity() : W.longestOf(r.K);
      auto reps = minimalCosetRepsLeft(*rd, p.J);
      Int n = powerThreshold(*rd, p.x.lambda);
      for (Int k = n; k <= n + n0; ++k) {
        AffineElement wGx = W.multiply(wG, W.power(p.x, k));
        Int base = W.length(wGx);
        for (int u : reps) {
          AffineElement uu = W.fromFinite(u);
          ok = ok && W.length(W.multiply(W.inverse(uu), W.multiply(wGx, uu))) == base;
        }
        // length additivity past the threshold
        ok = ok && W.length(W.multiply(wG, W.power(p.x, k + n0))) ==
                       base + W.length(W.power(p.x, n0));
        // class equivalence with the standard representative's power
        AffineElement wKy = W.multiply(wK, W.power(r.y, k));
        AffineElement m1 = reduceToMinimal(W, wGx).minimal;
        AffineElement m2 = reduceToMinimal(W, wKy).minimal;
        ok = ok && cyclicShiftClassOf(W, m1).contains(m2);
      }
    }
  }
  return ok;
}

// 7. closed-form character == matrix trace wherever the formula applies
bool charOracle() {
  bool ok = true;
  std::vector<Rat> freeVals{Rat(1), Rat(-1), Rat(2), Rat(1) / 2};
  for (const auto& name : kData) {
    DatumPtr rd = catalogDatum(name);
    const Weyl& W = rd->weylFull();
    ClassTable table = buildClassTable(W, 5);
    for (const auto& c : allCandidates(*rd, table, freeVals))
      for (size_t j = 0; j < table.rows.size(); ++j) {
        CharFormulaResult f = charFormula(W, table.rows[j], *c.pd, c.chi);
        if (f.covered) ok = ok && f.value == c.chvec[j];
      }
  }
  return ok;
}

// 8. full row rank of the character matrix, and exact decompose round trips
bool decomposition() {
  bool ok = true;
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const auto& name : kData) {
    DatumPtr rd = catalogDatum(name);
    ClassTable table = buildClassTable(rd->weylFull(), 5);
    auto cands = finiteCandidates(*rd, table);
    QMat mat(int(cands.size()), int(table.rows.size()));
    for (size_t i = 0; i < cands.size(); ++i)
      for (size_t j = 0; j < table.rows.size(); ++j) mat(int(i), int(j)) = cands[i].chvec[j];
    ok = ok && mat.rank() == int(cands.size());
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rat> want(cands.size());
      CharVector v(table.rows.size(), Rat(0));
      for (size_t i = 0; i < cands.size(); ++i) {
        want[i] = Rat(coeff(rng));
        for (size_t j = 0; j < v.size(); ++j) v[j] += want[i] * cands[i].chvec[j];
      }
      DecomposeResult res = decompose(table, v, cands);
      ok = ok && res.ok && res.coeff == want;
    }
  }
  return ok;
}

// 9. rigidity and the three supersingularity criteria
bool rigidityAndSS() {
  bool ok = true;
  for (const auto& name : kData) {
    DatumPtr rd = catalogDatum(name);
    const Weyl& W = rd->weylFull();
    ClassTable table = buildClassTable(W, 6);
    Cocenter coc(W, 6);
    auto cands = finiteCandidates(*rd, table);
    for (const auto& c : cands) {
      // isSupersingular throws if the evaluated criteria disagree
      SSReport r = isSupersingular(table, coc, c.pi, cands, c.pd->gamma());
      if (c.pd->J() != rd->fullJ()) continue;
      ok = ok && isRigid(table, c.chvec);
      std::vector<int> comp;
      for (int k = 0; k < W.numGenerators(); ++k)
        if (std::find(c.pd->gamma().begin(), c.pd->gamma().end(), k) == c.pd->gamma().end())
          comp.push_back(k);
      if (!W.finiteType(comp)) continue;
      ok = ok && r.value();
      // explicit window: E_w kills pi for 2 max(#W_Gamma, #W_complement) < l <= 6
      auto szG = W.subgroupElements(c.pd->gamma());
      auto szC = W.subgroupElements(comp);
      if (!szG || !szC) continue;
      Int lo = 2 * Int(std::max(szG->size(), szC->size()));
      for (const auto& level : W.ballByLength(6))
        for (const auto& e : level) {
          if (W.length(e) <= lo) continue;
          ok = ok && applyHecke(c.pi, eBasis(W, e).zero).isZero();
        }
    }
    // the principal series fails both tests
    auto princ = std::make_shared<ParahoricDatum>(*rd, std::vector<int>{}, std::vector<int>{});
    Character one{std::vector<Rat>(princ->stabGens().size(), Rat(1))};
    FDModule pi = inducePi(*princ, one);
    ok = ok && !isRigid(table, charVector(table, pi));
    ok = ok && !isSupersingular(table, coc, pi, cands).value();
  }
  return ok;
}

// 10. E-basis choice independence, q-integrality, and the support bound
bool eBasisIntegrity() {
  bool ok = true;
  for (const char* name : {"A1-sc", "A2-ad"}) {
    const Weyl& W = catalogDatum(name)->weylFull();
    // finite-type generator subsets with their sizes
    std::vector<std::pair<std::vector<int>, size_t>> gammas;
    int g = W.numGenerators();
    for (int mask = 0; mask < (1 << g); ++mask) {
      std::vector<int> K;
      for (int k = 0; k < g; ++k)
        if (mask & (1 << k)) K.push_back(k);
      if (!W.finiteType(K)) continue;
      gammas.emplace_back(K, W.subgroupElements(K)->size());
    }
    for (const auto& level : W.ballByLength(6))
      for (const auto& e : level) {
        EBasisElt E = eBasis(W, e);  // asserts three (mu1, mu2) choices agree, and integrality
        ok = ok && specializeZero(E.generic) == E.zero;
        HeckeElt twisted = iota(W, E.zero);
        for (const auto& [gamma, size] : gammas) {
          if (W.length(e) <= 2 * Int(size)) continue;
          auto outside = [&](const HeckeElt& h) {
            for (const auto& [z, c] : h.terms) {
              auto supp = W.support(z);
              bool inside = true;
              for (int s : supp)
                if (std::find(gamma.begin(), gamma.end(), s) == gamma.end()) inside = false;
              if (inside) return false;  // supp(z) contained in Gamma
            }
            return true;
          };
          ok = ok && (outside(E.zero) || outside(twisted));
        }
      }
  }
  return ok;
}

}  // namespace

int main() {
  run(1, "length oracle agreement, l <= 8", lengthAgreement);
  run(2, "Hecke quadratic/braid/associativity", heckeRelations);
  run(3, "cocenter commutator kernel, l <= 6", cocenterKernel);
  run(4, "projection path independence + maximality oracle", psiPathIndependence);
  run(5, "stabilized power identity window", wkWindow);
  run(6, "conjugation length identities + class equivalence window", uxWindow);
  run(7, "closed-form character == matrix trace", charOracle);
  run(8, "character matrix rank + decompose round trip", decomposition);
  run(9, "rigidity + supersingularity criteria", rigidityAndSS);
  run(10, "E-basis choice independence, integrality, support bound", eBasisIntegrity);
  return gAllOk ? 0 : 1;
}
