#include <hecke0/weyl.hpp>

#include <hecke0/lattice.hpp>
#include <hecke0/linalg.hpp>

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace hecke0 {

namespace {

BigInt ratFloor(const Rat& r) {
  BigInt n = numerator(r), d = denominator(r);
  BigInt q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

}  // namespace

Weyl::Weyl(const RootDatum& rd, std::vector<int> J) : rd_(rd), J_(std::move(J)) {
  std::sort(J_.begin(), J_.end());
  J_.erase(std::unique(J_.begin(), J_.end()), J_.end());
  for (int i : J_)
    if (i < 0 || i >= rd_.numSimple()) throw DatumError("J index out of range");
  std::vector<bool> inJ(rd_.numSimple(), false);
  for (int i : J_) inJ[i] = true;

  // R_J+ : positive roots supported on J
  for (int k = 0; k < rd_.numPositive(); ++k) {
    bool ok = true;
    for (int i = 0; i < rd_.numSimple(); ++i)
      if (rd_.rootCoords()[k][i] != 0 && !inJ[i]) ok = false;
    if (ok) posJ_.push_back(k);
  }

  // W_J by closure under the J-generators
  inWJ_.assign(rd_.order(), false);
  inWJ_[0] = true;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int i : J_) {
      int b = rd_.w0(a).rightMul[i];
      if (!inWJ_[b]) {
        inWJ_[b] = true;
        stack.push_back(b);
      }
    }
  }

  // components of J in the Dynkin diagram
  {
    std::map<int, int> comp;
    for (int i : J_) comp[i] = -1;
    int nc = 0;
    for (int i : J_) {
      if (comp[i] >= 0) continue;
      std::vector<int> q{i};
      comp[i] = nc;
      while (!q.empty()) {
        int a = q.back();
        q.pop_back();
        for (int b : J_)
          if (comp[b] < 0 && rd_.pair(rd_.simpleRoots()[a], rd_.simpleCoroots()[b]) != 0) {
            comp[b] = nc;
            q.push_back(b);
          }
      }
      ++nc;
    }
    jComponents_.assign(nc, {});
    for (int i : J_) jComponents_[comp[i]].push_back(i);
  }

  // S_aff: the finite generators in J-order, then one affine reflection
  // t^theta s_theta per component. The alcove geometry lives on the coroot
  // side (hyperplanes <x, alpha_vee> = k), so theta is the root whose
  // coroot is the highest coroot of the component; only that choice has
  // length 1. Coincides with the highest root in the simply-laced case.
  for (int i : J_) {
    saff_.push_back(fromFinite(rd_.w0(0).rightMul[i]));
    genFinite_.push_back(i);
    int c = 0;
    for (size_t cc = 0; cc < jComponents_.size(); ++cc)
      if (std::find(jComponents_[cc].begin(), jComponents_[cc].end(), i) != jComponents_[cc].end())
        c = int(cc);
    genComponent_.push_back(c);
  }
  for (const auto& comp : jComponents_) {
    std::vector<bool> inC(rd_.numSimple(), false);
    for (int i : comp) inC[i] = true;
    int best = -1;
    for (int k : posJ_) {
      bool touches = false, inside = true;
      for (int i = 0; i < rd_.numSimple(); ++i) {
        if (rd_.rootCoords()[k][i] != 0) {
          if (!inC[i]) inside = false;
          else touches = true;
        }
      }
      if (!inside || !touches) continue;
      if (best < 0) {
        best = k;
        continue;
      }
      bool ge = true;
      for (int i = 0; i < rd_.numSimple(); ++i)
        if (rd_.corootCoords()[k][i] < rd_.corootCoords()[best][i]) ge = false;
      if (ge) best = k;
    }
    assert(best >= 0);
    for (int k : posJ_) {
      // the highest coroot must dominate every coroot of the component
      bool touches = false;
      for (int i : comp)
        if (rd_.rootCoords()[k][i] != 0) touches = true;
      if (!touches) continue;
      for (int i = 0; i < rd_.numSimple(); ++i)
        assert(rd_.corootCoords()[k][i] <= rd_.corootCoords()[best][i]);
    }
    saff_.push_back({rd_.roots()[best], rd_.reflection(best)});
    genFinite_.push_back(-1);
    genComponent_.push_back(int(&comp - jComponents_.data()));
  }

  // rational interior point of the base alcove of R_J: <p, alpha_i_vee> =
  // 1/M for i in J, M = 1 + max coroot height, so 0 < <p, alpha_vee> < 1
  // on all of R_J+
  interior_.assign(rd_.rank(), Rat(0));
  if (!J_.empty()) {
    QMat a(int(J_.size()), rd_.rank());
    std::vector<Rat> rhs(J_.size(), Rat(1));
    for (size_t r = 0; r < J_.size(); ++r) {
      IVec e(rd_.rank(), 0);
      for (int c = 0; c < rd_.rank(); ++c) {
        e.assign(rd_.rank(), 0);
        e[c] = 1;
        a(int(r), c) = Rat(rd_.pair(e, rd_.simpleCoroots()[J_[r]]));
      }
    }
    auto p0 = a.solve(rhs);
    if (!p0) throw DatumError("no interior point (pairing degenerate on J)");
    Rat maxH = 0;
    for (int k : posJ_) maxH = std::max(maxH, rd_.pair(*p0, rd_.coroots()[k]));
    assert(denominator(maxH) == 1);
    Rat m = maxH + 1;
    for (int c = 0; c < rd_.rank(); ++c) interior_[c] = (*p0)[c] / m;
  }

  // Omega_J = X / ZR_J via the Smith form of the simple-root matrix
  omegaCoordMap_ = imatIdentity(rd_.rank());
  omegaDiag_.assign(rd_.rank(), 0);
  if (!J_.empty()) {
    IMat a(rd_.rank(), IVec(J_.size(), 0));
    for (size_t c = 0; c < J_.size(); ++c)
      for (int r = 0; r < rd_.rank(); ++r) a[r][c] = rd_.simpleRoots()[J_[c]][r];
    SmithForm sf = smithNormalForm(a);
    omegaCoordMap_ = sf.u;
    for (size_t i = 0; i < J_.size(); ++i) {
      omegaDiag_[i] = sf.d[i][i];
      if (omegaDiag_[i] == 0) throw DatumError("simple roots are linearly dependent");
    }
  }
  // U is unimodular; its inverse gives X-representatives of the class
  // coordinates
  QMat uq(rd_.rank(), rd_.rank());
  for (int i = 0; i < rd_.rank(); ++i)
    for (int j = 0; j < rd_.rank(); ++j) uq(i, j) = Rat(omegaCoordMap_[i][j]);
  auto uinv = uq.inverse();
  assert(uinv);
  omegaFinite_ = true;
  for (int i = 0; i < rd_.rank(); ++i) {
    if (omegaDiag_[i] == 1) continue;
    if (omegaDiag_[i] == 0) omegaFinite_ = false;
    OmegaGen g;
    g.order = omegaDiag_[i];
    g.rep.assign(rd_.rank(), 0);
    for (int r = 0; r < rd_.rank(); ++r) {
      Rat v = (*uinv)(r, i);
      assert(denominator(v) == 1);
      g.rep[r] = Int(numerator(v));
    }
    // bounded search for the length-0 lift t^{rep + mu} w, mu in ZR_J
    bool found = false;
    for (int bound = 0; bound <= 10 && !found; ++bound) {
      std::vector<Int> c(J_.size(), -bound);
      while (true) {
        IVec mu(rd_.rank(), 0);
        for (size_t t = 0; t < J_.size(); ++t)
          mu = addVec(mu, scaleVec(c[t], rd_.simpleRoots()[J_[t]]));
        AffineElement cand{addVec(g.rep, mu), 0};
        for (int w = 0; w < rd_.order() && !found; ++w) {
          if (!inWJ_[w]) continue;
          cand.w = w;
          if (length(cand) == 0) {
            g.lift = cand;
            found = true;
          }
        }
        if (found || J_.empty()) break;
        size_t t = 0;
        while (t < J_.size() && c[t] == bound) c[t++] = -bound;
        if (t == J_.size()) break;
        ++c[t];
      }
      if (J_.empty() && !found) break;
    }
    if (J_.empty()) {
      g.lift = translation(g.rep);
      found = true;
    }
    if (!found) throw DatumError("Omega lift search exhausted its bound");
    if (g.order > 0) {
      AffineElement p = power(g.lift, g.order);
      assert(p == identity());
    }
    omegaGens_.push_back(std::move(g));
  }

  if (omegaFinite_) {
    // enumerate all of Omega_J as canonical products of generator powers
    // generators were created scanning the class coordinates in order
    std::vector<size_t> genAt(rd_.rank(), size_t(-1));
    {
      size_t g = 0;
      for (int i = 0; i < rd_.rank(); ++i)
        if (omegaDiag_[i] != 1) genAt[i] = g++;
    }
    IVec res(rd_.rank(), 0);
    while (true) {
      AffineElement e = identity();
      for (int i = 0; i < rd_.rank(); ++i)
        if (omegaDiag_[i] > 1)
          for (Int k = 0; k < res[i]; ++k) e = multiply(e, omegaGens_[genAt[i]].lift);
      IVec cls = omegaClassOf(e);
      omegaIndex_[cls] = int(omegaElements_.size());
      omegaElements_.push_back(e);
      int i = 0;
      while (i < rd_.rank() && (omegaDiag_[i] <= 1 || res[i] == omegaDiag_[i] - 1)) {
        if (omegaDiag_[i] > 1) res[i] = 0;
        ++i;
      }
      if (i == rd_.rank()) break;
      ++res[i];
    }
  }
}

bool Weyl::rootInJ(int rootIdx) const {
  int k = rootIdx < rd_.numPositive() ? rootIdx : rootIdx - rd_.numPositive();
  return std::binary_search(posJ_.begin(), posJ_.end(), k);
}

AffineElement Weyl::multiply(const AffineElement& a, const AffineElement& b) const {
  return {addVec(a.lambda, rd_.w0Act(a.w, b.lambda)), rd_.w0Multiply(a.w, b.w)};
}

AffineElement Weyl::inverse(const AffineElement& a) const {
  int wi = rd_.w0Inverse(a.w);
  return {negVec(rd_.w0Act(wi, a.lambda)), wi};
}

AffineElement Weyl::power(const AffineElement& a, Int n) const {
  AffineElement base = n < 0 ? inverse(a) : a;
  if (n < 0) n = -n;
  AffineElement r = identity();
  for (Int i = 0; i < n; ++i) r = multiply(r, base);
  return r;
}

AffineElement Weyl::conjugate(const AffineElement& g, const AffineElement& x) const {
  return multiply(multiply(g, x), inverse(g));
}

bool Weyl::inGroup(const AffineElement& e) const { return inWJ_[e.w]; }

Int Weyl::length(const AffineElement& e) const {
  if (!inWJ_[e.w]) throw DatumError("element is not in W~_J");
  int wi = rd_.w0Inverse(e.w);
  Int len = 0;
  for (int k : posJ_) {
    Int c = rd_.pair(e.lambda, rd_.coroots()[k]);
    if (rd_.sendsToNegative(wi, k)) c -= 1;
    len += c < 0 ? -c : c;
  }
  return len;
}

Int Weyl::lengthHyperplanes(const AffineElement& e) const {
  if (!inWJ_[e.w]) throw DatumError("element is not in W~_J");
  QVec img = rd_.w0Act(e.w, interior_);
  for (int i = 0; i < rd_.rank(); ++i) img[i] += Rat(e.lambda[i]);
  Int count = 0;
  for (int k : posJ_) {
    Rat a = rd_.pair(interior_, rd_.coroots()[k]);
    Rat b = rd_.pair(img, rd_.coroots()[k]);
    assert(denominator(a) != 1 && denominator(b) != 1);
    BigInt n = ratFloor(std::max(a, b)) - ratFloor(std::min(a, b));
    count += Int(n);
  }
  return count;
}

int Weyl::generatorIndexOf(const AffineElement& s) const {
  for (size_t k = 0; k < saff_.size(); ++k)
    if (saff_[k] == s) return int(k);
  return -1;
}

AffineWord Weyl::reducedWord(const AffineElement& e) const {
  AffineWord out;
  AffineElement cur = e;
  Int len = length(cur);
  while (len > 0) {
    bool found = false;
    for (int k = 0; k < numGenerators() && !found; ++k) {
      AffineElement next = multiply(saff_[k], cur);
      if (length(next) == len - 1) {
        out.letters.push_back(k);
        cur = next;
        --len;
        found = true;
      }
    }
    if (!found) throw DatumError("no left descent found (length formula broken)");
  }
  out.tau = cur;
  return out;
}

AffineElement Weyl::evalWord(const AffineWord& word) const {
  AffineElement e = identity();
  for (int k : word.letters) e = multiply(e, saff_[k]);
  return multiply(e, word.tau);
}

std::vector<int> Weyl::support(const AffineElement& e) const {
  AffineWord word = reducedWord(e);
  std::set<int> supp(word.letters.begin(), word.letters.end());
  std::vector<int> perm = conjugationOnGenerators(word.tau);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int k : std::vector<int>(supp.begin(), supp.end()))
      if (supp.insert(perm[k]).second) grew = true;
  }
  return {supp.begin(), supp.end()};
}

const std::vector<AffineElement>& Weyl::omegaElements() const {
  if (!omegaFinite_) throw DatumError("Omega_J is infinite; enumeration refused");
  return omegaElements_;
}

IVec Weyl::omegaClassOf(const AffineElement& e) const {
  IVec c = imatApply(omegaCoordMap_, e.lambda);
  for (int i = 0; i < rd_.rank(); ++i)
    if (omegaDiag_[i] > 0) c[i] = ((c[i] % omegaDiag_[i]) + omegaDiag_[i]) % omegaDiag_[i];
  return c;
}

AffineElement Weyl::omegaLiftOf(const IVec& cls) const {
  // canonical lift: the product of generator lifts matching the class
  AffineElement e = identity();
  size_t g = 0;
  for (int i = 0; i < rd_.rank(); ++i) {
    if (omegaDiag_[i] == 1) {
      if (cls[i] != 0) throw DatumError("class coordinate out of range");
      continue;
    }
    Int r = cls[i];
    if (omegaDiag_[i] > 1) r = ((r % omegaDiag_[i]) + omegaDiag_[i]) % omegaDiag_[i];
    e = multiply(e, power(omegaGens_[g].lift, r));
    ++g;
  }
  assert(omegaClassOf(e) == [&] {
    IVec c = cls;
    for (int i = 0; i < rd_.rank(); ++i)
      if (omegaDiag_[i] > 0) c[i] = ((c[i] % omegaDiag_[i]) + omegaDiag_[i]) % omegaDiag_[i];
    return c;
  }());
  return e;
}

std::vector<int> Weyl::conjugationOnGenerators(const AffineElement& tau) const {
  std::vector<int> perm(saff_.size());
  for (size_t k = 0; k < saff_.size(); ++k) {
    int idx = generatorIndexOf(conjugate(tau, saff_[k]));
    if (idx < 0) throw DatumError("conjugation does not preserve S_aff (not length 0?)");
    perm[k] = idx;
  }
  return perm;
}

Weyl::Coset Weyl::cosetDecompose(const AffineElement& e, const std::vector<int>& Jsub) const {
  int d = e.w, u = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : Jsub) {
      int ridx = rd_.rootIndex(rd_.simpleRoots()[i]);
      if (rd_.sendsToNegative(d, ridx)) {
        d = rd_.w0(d).rightMul[i];
        u = rd_.w0(u).leftMul[i];
        moved = true;
        break;
      }
    }
  }
  IVec lam = rd_.w0Act(rd_.w0Inverse(d), e.lambda);
  return {d, {lam, u}};
}

bool Weyl::isJPositive(const AffineElement& e, const std::vector<int>& Jsub) const {
  Coset c = cosetDecompose(e, Jsub);
  if (c.d != 0) throw DatumError("element is not in W~_Jsub");
  std::vector<bool> inJ(rd_.numSimple(), false);
  for (int i : Jsub) inJ[i] = true;
  for (int k = 0; k < rd_.numPositive(); ++k) {
    bool inside = true;
    for (int i = 0; i < rd_.numSimple(); ++i)
      if (rd_.rootCoords()[k][i] != 0 && !inJ[i]) inside = false;
    if (inside) continue;  // alpha in R_J+
    if (rd_.pair(e.lambda, rd_.coroots()[k]) < 0) return false;
  }
  return true;
}

AffineElement Weyl::demazureProduct(const AffineElement& a, const AffineElement& b) const {
  AffineWord word = reducedWord(b);
  AffineElement e = a;
  Int len = length(e);
  for (int k : word.letters) {
    AffineElement next = multiply(e, saff_[k]);
    Int ln = length(next);
    if (ln > len) {
      e = next;
      len = ln;
    }
  }
  return multiply(e, word.tau);
}

std::vector<std::vector<AffineElement>> Weyl::ballByLength(int L) const {
  std::vector<std::vector<AffineElement>> levels(L + 1);
  levels[0] = omegaElements();
  for (int l = 1; l <= L; ++l) {
    std::set<AffineElement> next;
    for (const auto& e : levels[l - 1])
      for (const auto& s : saff_) {
        AffineElement f = multiply(s, e);
        if (length(f) == l) next.insert(f);
      }
    levels[l].assign(next.begin(), next.end());
  }
  return levels;
}

std::vector<AffineElement> Weyl::ball(int L) const {
  auto levels = ballByLength(L);
  std::vector<AffineElement> all;
  for (auto& lv : levels) all.insert(all.end(), lv.begin(), lv.end());
  return all;
}

std::optional<std::vector<AffineElement>> Weyl::subgroupElements(const std::vector<int>& K,
                                                                 int cap) const {
  std::set<AffineElement> seen{identity()};
  std::vector<AffineElement> order{identity()};
  for (size_t i = 0; i < order.size(); ++i) {
    for (int k : K) {
      AffineElement f = multiply(order[i], saff_[k]);
      if (seen.insert(f).second) {
        order.push_back(f);
        if (int(order.size()) > cap) return std::nullopt;
      }
    }
  }
  return order;
}

bool Weyl::finiteType(const std::vector<int>& K, int /*cap*/) const {
  // W_K is finite iff K omits at least one node of every affine component
  // diagram (each component of S_aff is an affine diagram)
  std::vector<int> have(jComponents_.size(), 0), want(jComponents_.size(), 0);
  for (int k = 0; k < numGenerators(); ++k) ++want[genComponent_[k]];
  for (int k : K) ++have[genComponent_[k]];
  for (size_t c = 0; c < jComponents_.size(); ++c)
    if (have[c] == want[c] && want[c] > 0) return false;
  return true;
}

AffineElement Weyl::longestOf(const std::vector<int>& K) const {
  auto elts = subgroupElements(K);
  if (!elts) throw DatumError("W_K is not finite");
  const AffineElement* best = nullptr;
  Int bestLen = -1;
  for (const auto& e : *elts) {
    Int l = length(e);
    if (l > bestLen) {
      bestLen = l;
      best = &e;
    }
  }
  return *best;
}

}  // namespace hecke0
