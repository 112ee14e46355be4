#include <hecke0/conjugacy.hpp>

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace hecke0 {

bool CyclicShiftClass::contains(const AffineElement& e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

std::pair<AffineElement, ShiftKind> cyclicShiftStep(const Weyl& W, const AffineElement& e,
                                                    int gen) {
  const AffineElement& s = W.generator(gen);
  AffineElement f = W.multiply(W.multiply(s, e), s);
  Int le = W.length(e), lf = W.length(f);
  ShiftKind kind = lf > le ? ShiftKind::NotAStep
                           : (lf == le ? ShiftKind::Preserved : ShiftKind::Dropped);
  return {f, kind};
}

ReductionResult reduceToMinimal(const Weyl& W, const AffineElement& e, int budget) {
  ReductionResult out;
  AffineElement cur = e;
  int visited = 0;
  while (true) {
    // breadth-first over the equal-length plateau, looking for a drop
    Int len = W.length(cur);
    std::map<AffineElement, std::pair<AffineElement, int>> prev;  // node -> (from, gen)
    std::deque<AffineElement> queue{cur};
    prev[cur] = {cur, -1};
    bool dropped = false;
    while (!queue.empty() && !dropped) {
      AffineElement z = queue.front();
      queue.pop_front();
      if (++visited > budget) throw DatumError("cyclic-shift plateau exceeded budget");
      for (int g = 0; g < W.numGenerators() && !dropped; ++g) {
        auto [f, kind] = cyclicShiftStep(W, z, g);
        if (kind == ShiftKind::Dropped) {
          // replay the plateau path into the audit trail, then drop
          std::vector<ShiftStep> trail;
          for (AffineElement p = z; prev[p].second >= 0; p = prev[p].first)
            trail.push_back({prev[p].second, ShiftKind::Preserved, p});
          std::reverse(trail.begin(), trail.end());
          for (auto& st : trail) out.path.push_back(st);
          out.path.push_back({g, ShiftKind::Dropped, f});
          cur = f;
          dropped = true;
        } else if (kind == ShiftKind::Preserved && !prev.count(f)) {
          prev[f] = {z, g};
          queue.push_back(f);
        }
      }
    }
    if (!dropped) {
      assert(W.length(cur) == len);
      out.minimal = cur;
      return out;
    }
  }
}

CyclicShiftClass cyclicShiftClassOf(const Weyl& W, const AffineElement& minimal) {
  CyclicShiftClass cls;
  cls.length = W.length(minimal);
  std::set<AffineElement> seen{minimal};
  std::deque<AffineElement> queue{minimal};
  const auto& omega = W.omegaElements();
  while (!queue.empty()) {
    AffineElement z = queue.front();
    queue.pop_front();
    for (int g = 0; g < W.numGenerators(); ++g) {
      auto [f, kind] = cyclicShiftStep(W, z, g);
      if (kind == ShiftKind::Dropped)
        throw DatumError("element is not minimal in its conjugacy class");
      if (kind == ShiftKind::Preserved && seen.insert(f).second) queue.push_back(f);
    }
    for (const auto& tau : omega) {
      AffineElement f = W.conjugate(tau, z);
      assert(W.length(f) == cls.length);
      if (seen.insert(f).second) queue.push_back(f);
    }
  }
  cls.members.assign(seen.begin(), seen.end());
  cls.rep = cls.members.front();
  cls.newton = newtonPointDominant(W, cls.rep);
  return cls;
}

std::vector<CyclicShiftClass> enumerateMinClasses(const Weyl& W, int L) {
  std::vector<CyclicShiftClass> out;
  std::set<AffineElement> visited;
  auto levels = W.ballByLength(L);
  for (int l = 0; l <= L; ++l) {
    for (const auto& e : levels[l]) {
      if (visited.count(e)) continue;
      auto red = reduceToMinimal(W, e);
      if (W.length(red.minimal) < l) {
        visited.insert(e);  // not minimal; its class lives at lower length
        continue;
      }
      CyclicShiftClass cls = cyclicShiftClassOf(W, e);
      visited.insert(cls.members.begin(), cls.members.end());
      out.push_back(std::move(cls));
    }
  }
  std::sort(out.begin(), out.end(), [](const CyclicShiftClass& a, const CyclicShiftClass& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.rep < b.rep;
  });
  return out;
}

namespace {

// the class Sigma_e by the plateau/drop recursion; the strategy only
// changes which admissible step is taken, never the answer
CyclicShiftClass sigmaClass(const Weyl& W, const AffineElement& e, SigmaStrategy strat) {
  Int len = W.length(e);
  std::set<AffineElement> seen{e};
  std::deque<AffineElement> queue{e};
  bool haveDrop = false;
  AffineElement dropTo;  // s*z for the chosen drop z ->^s szs
  while (!queue.empty()) {
    AffineElement z = queue.front();
    queue.pop_front();
    for (int gi = 0; gi < W.numGenerators(); ++gi) {
      int g = strat == SigmaStrategy::ReverseScan ? W.numGenerators() - 1 - gi : gi;
      auto [f, kind] = cyclicShiftStep(W, z, g);
      if (kind == ShiftKind::Dropped) {
        AffineElement sz = W.multiply(W.generator(g), z);
        if (strat == SigmaStrategy::LastDrop) {
          haveDrop = true;
          dropTo = sz;  // keep scanning; take the last one discovered
        } else {
          return sigmaClass(W, sz, strat);
        }
      } else if (kind == ShiftKind::Preserved && seen.insert(f).second) {
        queue.push_back(f);
      }
    }
  }
  if (haveDrop) return sigmaClass(W, dropTo, strat);
  (void)len;
  return cyclicShiftClassOf(W, e);
}

}  // namespace

SigmaResult sigmaOf(const Weyl& W, const AffineElement& e, SigmaStrategy strategy) {
  SigmaResult r;
  r.cls = sigmaClass(W, e, strategy);
  r.sign = (W.length(e) - r.cls.length) % 2 == 0 ? 1 : -1;
  return r;
}

QVec newtonPoint(const Weyl& W, const AffineElement& e) {
  // order of the finite part
  Int n = 1;
  {
    int w = e.w;
    const RootDatum& rd = W.datum();
    while (w != 0) {
      w = rd.w0Multiply(w, e.w);
      ++n;
    }
  }
  AffineElement p = W.power(e, n);
  assert(p.w == 0);
  QVec nu(p.lambda.size());
  for (size_t i = 0; i < p.lambda.size(); ++i) nu[i] = Rat(p.lambda[i], n);
  return nu;
}

QVec newtonPointDominant(const Weyl& W, const AffineElement& e) {
  return W.datum().dominantRep(newtonPoint(W, e)).first;
}

bool isStraight(const Weyl& W, const AffineElement& e) {
  QVec nubar = newtonPointDominant(W, e);
  return Rat(W.length(e)) == W.datum().pair(nubar, W.datum().twoRhoVee());
}

namespace {

std::vector<std::vector<int>> subsetsBySizeThenLex(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

StandardRep standardRepresentative(const Weyl& W, const CyclicShiftClass& cls) {
  for (const auto& K : subsetsBySizeThenLex(W.numGenerators())) {
    if (!W.finiteType(K)) continue;
    for (const auto& z : cls.members) {
      // y = the minimal-length element of W_K z; w collects the prefix
      AffineElement y = z, w = W.identity();
      bool moved = true;
      while (moved) {
        moved = false;
        for (int k : K) {
          AffineElement sy = W.multiply(W.generator(k), y);
          if (W.length(sy) < W.length(y)) {
            y = sy;
            w = W.multiply(w, W.generator(k));
            moved = true;
            break;
          }
        }
      }
      if (!isStraight(W, y)) continue;
      bool ok = true;
      std::vector<int> perm(W.numGenerators(), -1);
      for (int k : K) {
        if (W.length(W.multiply(y, W.generator(k))) < W.length(y)) ok = false;  // right-reduced
        int idx = W.generatorIndexOf(W.conjugate(y, W.generator(k)));
        if (idx < 0 || !std::binary_search(K.begin(), K.end(), idx)) ok = false;  // yKy^-1 = K
        perm[k] = idx;
      }
      if (!ok) continue;
      // shrink K to the y-conjugation closure of supp(w)
      std::vector<int> inv(W.numGenerators(), -1);
      for (int k : K) inv[perm[k]] = k;
      std::vector<int> supp = W.support(w);
      std::set<int> shrunk(supp.begin(), supp.end());
      bool grew = true;
      while (grew) {
        grew = false;
        for (int k : std::vector<int>(shrunk.begin(), shrunk.end())) {
          if (shrunk.insert(perm[k]).second) grew = true;
          if (shrunk.insert(inv[k]).second) grew = true;
        }
      }
      return {w, y, {shrunk.begin(), shrunk.end()}};
    }
  }
  throw DatumError("no standard representative found (contradicts Prop. rep)");
}

StandardPair standardPairFromRep(const Weyl& W, const StandardRep& rep) {
  const RootDatum& rd = W.datum();
  QVec nu = newtonPoint(W, rep.y);
  auto [nubar, z] = rd.dominantRep(nu);
  StandardPair pair;
  pair.J = rd.jOfVector(nubar);
  AffineElement zf = W.fromFinite(z);
  pair.x = W.conjugate(zf, rep.y);
  const Weyl& WJ = rd.weyl(pair.J);
  for (int k : rep.K) {
    AffineElement g = W.conjugate(zf, W.generator(k));
    int idx = WJ.generatorIndexOf(g);
    if (idx < 0) throw DatumError("Gamma escapes J_aff (standard pair broken)");
    pair.gamma.push_back(idx);
  }
  std::sort(pair.gamma.begin(), pair.gamma.end());
  // invariants of a standard pair
  if (!WJ.inGroup(pair.x)) throw DatumError("x is not in W~_J");
  if (newtonPoint(W, pair.x) != nubar) throw DatumError("nu_x is not dominant");
  if (!WJ.finiteType(pair.gamma)) throw DatumError("W_Gamma is infinite");
  std::set<AffineElement> gset;
  for (int k : pair.gamma) gset.insert(WJ.generator(k));
  for (int k : pair.gamma)
    if (!gset.count(W.conjugate(pair.x, WJ.generator(k))))
      throw DatumError("x Gamma x^-1 != Gamma");
  return pair;
}

StandardPair standardPairOf(const Weyl& W, const CyclicShiftClass& cls) {
  return standardPairFromRep(W, standardRepresentative(W, cls));
}

bool pairsEquivalent(const RootDatum& rd, const StandardPair& a, const StandardPair& b) {
  if (a.J != b.J) return false;
  if (!(a.x == b.x)) return false;
  const Weyl& WJ = rd.weyl(a.J);
  int n = WJ.numGenerators();
  // finite image of Omega_J in Sym(J_aff)
  std::vector<std::vector<int>> gens;
  for (const auto& g : WJ.omegaGens()) {
    std::vector<int> p = WJ.conjugationOnGenerators(g.lift);
    std::vector<int> pi(n);
    for (int i = 0; i < n; ++i) pi[p[i]] = i;
    gens.push_back(p);
    gens.push_back(pi);
  }
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::set<std::vector<int>> group{id};
  std::deque<std::vector<int>> queue{id};
  while (!queue.empty()) {
    auto p = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      std::vector<int> q(n);
      for (int i = 0; i < n; ++i) q[i] = g[p[i]];
      if (group.insert(q).second) queue.push_back(q);
    }
  }
  std::set<int> bset(b.gamma.begin(), b.gamma.end());
  for (const auto& p : group) {
    std::set<int> image;
    for (int k : a.gamma) image.insert(p[k]);
    if (image == bset) return true;
  }
  return false;
}

namespace {

bool leqAffine(const Weyl& W, const AffineElement& u, const AffineElement& w) {
  Int lu = W.length(u), lw = W.length(w);
  if (lu > lw) return false;
  if (lw == 0) return u == w;
  AffineWord word = W.reducedWord(w);
  const AffineElement& s = W.generator(word.letters.front());
  AffineElement su = W.multiply(s, u), sw = W.multiply(s, w);
  if (W.length(su) < lu) return leqAffine(W, su, sw);
  return leqAffine(W, u, sw);
}

}  // namespace

bool bruhatLeq(const Weyl& W, const AffineElement& a, const AffineElement& b) {
  AffineWord wa = W.reducedWord(a), wb = W.reducedWord(b);
  if (!(wa.tau == wb.tau)) return false;
  AffineElement itau = W.inverse(wa.tau);
  return leqAffine(W, W.multiply(a, itau), W.multiply(b, itau));
}

bool precedes(const Weyl& W, const CyclicShiftClass& cls, const AffineElement& e) {
  for (const auto& m : cls.members)
    if (bruhatLeq(W, m, e)) return true;
  return false;
}

SigmaResult sigmaByMaximality(const Weyl& W, const std::vector<CyclicShiftClass>& table,
                              const AffineElement& e) {
  std::vector<int> below;
  for (size_t i = 0; i < table.size(); ++i)
    if (precedes(W, table[i], e)) below.push_back(int(i));
  if (below.empty()) throw DatumError("no class precedes e (table too small?)");
  std::vector<int> maximal;
  for (int c : below) {
    bool top = true;
    for (int d : below)
      if (d != c && !precedes(W, table[d], table[c].rep)) top = false;
    if (top) maximal.push_back(c);
  }
  if (maximal.size() != 1)
    throw DatumError("maximal preceding class is not unique (contradicts Prop. Sigma)");
  SigmaResult r;
  r.cls = table[maximal.front()];
  r.sign = (W.length(e) - r.cls.length) % 2 == 0 ? 1 : -1;
  return r;
}

int findClass(const std::vector<CyclicShiftClass>& table, const AffineElement& member) {
  for (size_t i = 0; i < table.size(); ++i)
    if (table[i].contains(member)) return int(i);
  return -1;
}

std::string classLabel(const std::vector<CyclicShiftClass>& table, int idx) {
  int pos = 0;
  for (int i = 0; i < idx; ++i)
    if (table[i].length == table[idx].length) ++pos;
  return std::to_string(table[idx].length) + "." + std::to_string(pos);
}

}  // namespace hecke0
