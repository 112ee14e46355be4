#include <hecke0/reps.hpp>

#include <hecke0/lattice.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hecke0 {

namespace {

std::vector<int> applyPerm(const std::vector<int>& perm, const std::vector<int>& set) {
  std::vector<int> out;
  out.reserve(set.size());
  for (int s : set) out.push_back(perm[s]);
  std::sort(out.begin(), out.end());
  return out;
}

bool isSubset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Orbit of a generator subset under conjugation by Omega_J, BFS order,
/// together with transversal exponent words over the Omega generators.
struct GammaOrbit {
  std::vector<std::vector<int>> points;
  std::vector<IVec> words;
  std::map<std::vector<int>, int> pos;
};

GammaOrbit gammaOrbit(const Weyl& WJ, const std::vector<int>& gamma) {
  const auto& gens = WJ.omegaGens();
  int r = int(gens.size());
  std::vector<std::vector<int>> perms, permsInv;
  for (const auto& g : gens) {
    perms.push_back(WJ.conjugationOnGenerators(g.lift));
    permsInv.push_back(WJ.conjugationOnGenerators(WJ.inverse(g.lift)));
  }
  GammaOrbit o;
  std::vector<int> base = gamma;
  std::sort(base.begin(), base.end());
  o.points.push_back(base);
  o.words.push_back(IVec(r, 0));
  o.pos[base] = 0;
  for (size_t head = 0; head < o.points.size(); ++head) {
    auto point = o.points[head];
    auto word = o.words[head];
    for (int i = 0; i < r; ++i) {
      for (int dir : {+1, -1}) {
        if (dir < 0 && gens[i].order != 0) continue;  // inverse is a power
        auto np = applyPerm(dir > 0 ? perms[i] : permsInv[i], point);
        if (o.pos.count(np)) continue;
        IVec nw = word;
        nw[i] += dir;
        o.pos[np] = int(o.points.size());
        o.points.push_back(np);
        o.words.push_back(nw);
      }
    }
  }
  return o;
}

AffineElement evalOmegaWord(const Weyl& WJ, const IVec& word) {
  const auto& gens = WJ.omegaGens();
  AffineElement e = WJ.identity();
  for (size_t i = 0; i < word.size(); ++i)
    if (word[i] != 0) e = WJ.multiply(e, WJ.power(gens[i].lift, word[i]));
  return e;
}

/// omegaClassOf gives one coordinate per Smith row of X/ZR_J; compress to
/// one coordinate per generator (rows with divisor 1 are identically zero).
IVec genClassOf(const Weyl& WJ, const AffineElement& e) {
  const auto& gens = WJ.omegaGens();
  IVec full = WJ.omegaClassOf(e);
  IVec out(gens.size(), 0);
  for (size_t j = 0; j < gens.size(); ++j) {
    IVec gj = WJ.omegaClassOf(gens[j].lift);
    int row = -1;
    for (size_t i = 0; i < gj.size(); ++i)
      if (gj[i] != 0) {
        if (row >= 0 || gj[i] != 1) throw std::logic_error("genClassOf: generator class not a unit vector");
        row = int(i);
      }
    if (row < 0) throw std::logic_error("genClassOf: trivial generator class");
    out[j] = full[row];
    full[row] = 0;
  }
  for (Int v : full)
    if (v != 0) throw std::logic_error("genClassOf: residue outside generator rows");
  return out;
}

/// Integer solve A z = b via Smith normal form; A row-major rows x cols.
std::optional<IVec> intSolve(const IMat& a, const IVec& b) {
  int rows = int(a.size());
  int cols = rows ? int(a[0].size()) : 0;
  if (rows == 0) return IVec(cols, 0);
  SmithForm sf = smithNormalForm(a);
  IVec ub = imatApply(sf.u, b);
  IVec y(cols, 0);
  for (int i = 0; i < rows; ++i) {
    Int d = (i < cols) ? sf.d[i][i] : 0;
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    }
  }
  return imatApply(sf.v, y);
}

IMat imatInverse(const IMat& m) {
  int n = int(m.size());
  QMat q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q(i, j) = Rat(m[i][j]);
  auto inv = q.inverse();
  if (!inv) throw std::runtime_error("imatInverse: singular");
  IMat out(n, IVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = (*inv)(i, j);
      if (boost::multiprecision::denominator(v) != 1)
        throw std::runtime_error("imatInverse: not unimodular");
      out[i][j] = Int(boost::multiprecision::numerator(v));
    }
  return out;
}

Rat ratPow(const Rat& base, Int e) {
  Rat out = 1;
  Rat b = base;
  Int n = e;
  if (n < 0) {
    b = Rat(1) / b;
    n = -n;
  }
  for (Int i = 0; i < n; ++i) out *= b;
  return out;
}

std::string setStr(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

}  // namespace

std::vector<int> canonicalGammaOf(const Weyl& WJ, const std::vector<int>& gamma) {
  auto o = gammaOrbit(WJ, gamma);
  return *std::min_element(o.points.begin(), o.points.end());
}

ParahoricDatum::ParahoricDatum(const RootDatum& rd, std::vector<int> J, std::vector<int> gamma)
    : rd_(rd), WJ_(rd.weyl([&] {
        std::sort(J.begin(), J.end());
        return J;
      }())),
      J_(WJ_.J()), gamma_(std::move(gamma)) {
  std::sort(gamma_.begin(), gamma_.end());
  for (int g : gamma_)
    if (g < 0 || g >= WJ_.numGenerators()) throw std::invalid_argument("gamma index out of range");
  if (!WJ_.finiteType(gamma_)) throw std::invalid_argument("W_Gamma is infinite");

  const auto& gens = WJ_.omegaGens();
  int r = int(gens.size());
  auto orb = gammaOrbit(WJ_, gamma_);
  orbit_ = orb.points;
  for (const auto& w : orb.words) cosetReps_.push_back(evalOmegaWord(WJ_, w));

  if (r == 0) return;

  // Schreier generators of the stabilizer preimage in Z^r.
  std::vector<IVec> schreier;
  std::vector<std::vector<int>> perms, permsInv;
  for (const auto& g : gens) {
    perms.push_back(WJ_.conjugationOnGenerators(g.lift));
    permsInv.push_back(WJ_.conjugationOnGenerators(WJ_.inverse(g.lift)));
  }
  for (size_t p = 0; p < orbit_.size(); ++p) {
    for (int i = 0; i < r; ++i) {
      for (int dir : {+1, -1}) {
        if (dir < 0 && gens[i].order != 0) continue;
        auto np = applyPerm(dir > 0 ? perms[i] : permsInv[i], orbit_[p]);
        int q = orb.pos.at(np);
        IVec v = orb.words[p];
        v[i] += dir;
        for (int k = 0; k < r; ++k) v[k] -= orb.words[q][k];
        schreier.push_back(v);
      }
    }
  }
  // Torsion relations of Omega_J act trivially, so they lie in the kernel.
  std::vector<IVec> rels;
  for (int i = 0; i < r; ++i)
    if (gens[i].order != 0) {
      IVec v(r, 0);
      v[i] = gens[i].order;
      rels.push_back(v);
      schreier.push_back(v);
    }

  auto hb = hermiteBasis(schreier, r);
  if (!hb.fullRank) throw std::logic_error("stabilizer lattice rank deficient");
  if (hb.index != Int(orbit_.size())) throw std::logic_error("stabilizer index mismatch");

  // Diagonalize the relation lattice inside the stabilizer lattice; the
  // quotient is Omega_J(Gamma) with independent generators.
  int t = int(rels.size());
  IMat basis = hb.basis;  // r x r, columns are the basis
  std::vector<Int> orders(r, 0);
  if (t > 0) {
    IMat c(r, IVec(t, 0));
    for (int j = 0; j < t; ++j) {
      IVec coords = latticeCoords(rels[j], basis);
      for (int i = 0; i < r; ++i) c[i][j] = coords[i];
    }
    SmithForm sf = smithNormalForm(c);
    basis = imatMul(basis, imatInverse(sf.u));
    for (int i = 0; i < std::min(r, t); ++i) orders[i] = sf.d[i][i];
  }
  for (int j = 0; j < r; ++j) {
    IVec col(r);
    for (int i = 0; i < r; ++i) col[i] = basis[i][j];
    if (orders[j] == 1) {
      // trivial in Omega_J: fold into the relation columns
      relCols_.push_back(col);
      continue;
    }
    stabBasis_.push_back(col);
    stabGens_.push_back({evalOmegaWord(WJ_, col), orders[j]});
  }
  for (const auto& v : rels) relCols_.push_back(v);
}

bool ParahoricDatum::stabilizes(const AffineElement& tau) const {
  return applyPerm(WJ_.conjugationOnGenerators(tau), gamma_) == gamma_;
}

int ParahoricDatum::cosetOf(const AffineElement& tau) const {
  auto p = applyPerm(WJ_.conjugationOnGenerators(tau), gamma_);
  for (size_t i = 0; i < orbit_.size(); ++i)
    if (orbit_[i] == p) return int(i);
  throw std::logic_error("cosetOf: point not in orbit");
}

IVec ParahoricDatum::stabCoords(const AffineElement& x) const {
  if (WJ_.length(x) != 0) throw std::invalid_argument("stabCoords: not length zero");
  if (!stabilizes(x)) throw std::invalid_argument("stabCoords: not in Omega_J(Gamma)");
  int r = int(WJ_.omegaGens().size());
  if (r == 0) return {};
  int k = int(stabBasis_.size());
  IVec v = genClassOf(WJ_, x);
  // solve [stabBasis | relCols] z = v over Z
  IMat a(r, IVec(k + int(relCols_.size()), 0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < r; ++i) a[i][j] = stabBasis_[j][i];
  for (size_t j = 0; j < relCols_.size(); ++j)
    for (int i = 0; i < r; ++i) a[i][k + j] = relCols_[j][i];
  auto z = intSolve(a, v);
  if (!z) throw std::logic_error("stabCoords: unsolvable despite stabilizing");
  return IVec(z->begin(), z->begin() + k);
}

void validateCharacter(const ParahoricDatum& pd, const Character& chi) {
  if (chi.values.size() != pd.stabGens().size())
    throw std::invalid_argument("character arity mismatch");
  for (size_t j = 0; j < chi.values.size(); ++j) {
    const Rat& v = chi.values[j];
    if (v == 0) throw std::invalid_argument("character value zero");
    Int d = pd.stabGens()[j].order;
    if (d != 0 && ratPow(v, d) != 1)
      throw std::invalid_argument("character value order does not divide generator order");
  }
}

Rat chiEval(const ParahoricDatum& pd, const Character& chi, const AffineElement& x) {
  IVec c = pd.stabCoords(x);
  Rat out = 1;
  for (size_t j = 0; j < c.size(); ++j) out *= ratPow(chi.values[j], c[j]);
  return out;
}

std::vector<Character> characterTestSet(const ParahoricDatum& pd,
                                        const std::vector<Rat>& freeValues) {
  std::vector<std::vector<Rat>> choices;
  for (const auto& g : pd.stabGens()) {
    if (g.order == 0)
      choices.push_back(freeValues);
    else if (g.order % 2 == 0)
      choices.push_back({Rat(1), Rat(-1)});
    else
      choices.push_back({Rat(1)});
  }
  std::vector<Character> out;
  std::vector<size_t> idx(choices.size(), 0);
  while (true) {
    Character chi;
    for (size_t j = 0; j < choices.size(); ++j) chi.values.push_back(choices[j][idx[j]]);
    out.push_back(chi);
    size_t j = 0;
    for (; j < choices.size(); ++j) {
      if (++idx[j] < choices[j].size()) break;
      idx[j] = 0;
    }
    if (j == choices.size()) break;
  }
  return out;
}

Rat chiExtended(const ParahoricDatum& pd, const Character& chi, const AffineElement& b) {
  const Weyl& WJ = pd.weylJ();
  AffineWord w = WJ.reducedWord(b);
  for (int letter : w.letters)
    if (!std::binary_search(pd.gamma().begin(), pd.gamma().end(), letter)) return 0;
  if (!pd.stabilizes(w.tau)) return 0;
  Rat sign = (w.letters.size() % 2 == 0) ? 1 : -1;
  return sign * chiEval(pd, chi, w.tau);
}

// --- FDModule ----------------------------------------------------------------

FDModule zeroModule(const Weyl& W) {
  FDModule m;
  m.W = &W;
  m.dim = 0;
  m.sMat.assign(W.numGenerators(), QMat(0, 0));
  m.oMat.assign(W.omegaGens().size(), QMat(0, 0));
  m.oMatInv = m.oMat;
  return m;
}

QMat omegaMatrix(const FDModule& m, const AffineElement& tau) {
  const Weyl& W = *m.W;
  if (W.length(tau) != 0) throw std::invalid_argument("omegaMatrix: not length zero");
  IVec c = genClassOf(W, tau);
  QMat out = QMat::identity(m.dim);
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const QMat& g = c[i] > 0 ? m.oMat[i] : m.oMatInv[i];
    for (Int k = 0, n = c[i] > 0 ? c[i] : -c[i]; k < n; ++k) out = out * g;
  }
  return out;
}

QMat actionMatrix(const FDModule& m, const AffineElement& e) {
  const Weyl& W = *m.W;
  AffineWord w = W.reducedWord(e);
  QMat out = QMat::identity(m.dim);
  for (int letter : w.letters) out = out * m.sMat[letter];
  return out * omegaMatrix(m, w.tau);
}

Rat traceOf(const FDModule& m, const AffineElement& e) { return actionMatrix(m, e).trace(); }

Rat traceOfClass(const FDModule& m, const CyclicShiftClass& cls) {
  return traceOf(m, cls.rep);
}

QMat applyHecke(const FDModule& m, const HeckeElt& h) {
  if (h.mode != HeckeMode::Zero) throw std::invalid_argument("applyHecke: zero mode only");
  QMat out(m.dim, m.dim);
  for (const auto& [e, c] : h.terms) out = out + actionMatrix(m, e) * Rat(c.coeff(0));
  return out;
}

int verifyRelations(const FDModule& m) {
  const Weyl& W = *m.W;
  int bad = 0;
  QMat id = QMat::identity(m.dim);
  int nGen = W.numGenerators();
  for (int s = 0; s < nGen; ++s)
    if (!(m.sMat[s] * m.sMat[s] + m.sMat[s]).isZero()) ++bad;
  for (int s = 0; s < nGen; ++s) {
    for (int t = s + 1; t < nGen; ++t) {
      // braid order of (s t), capped: no relation if the product has
      // infinite order
      AffineElement st = W.multiply(W.generator(s), W.generator(t));
      AffineElement p = st;
      int order = 0;
      for (int k = 1; k <= 8; ++k) {
        if (p == W.identity()) {
          order = k;
          break;
        }
        p = W.multiply(p, st);
      }
      if (order == 0) continue;
      QMat lhs = id, rhs = id;
      for (int k = 0; k < order; ++k) {
        lhs = lhs * ((k % 2 == 0) ? m.sMat[s] : m.sMat[t]);
        rhs = rhs * ((k % 2 == 0) ? m.sMat[t] : m.sMat[s]);
      }
      if (!(lhs == rhs)) ++bad;
    }
  }
  const auto& ogens = W.omegaGens();
  for (size_t i = 0; i < ogens.size(); ++i) {
    if (!(m.oMat[i] * m.oMatInv[i] == id)) ++bad;
    if (ogens[i].order != 0 && !(m.oMat[i].pow(ogens[i].order) == id)) ++bad;
    for (size_t j = i + 1; j < ogens.size(); ++j)
      if (!(m.oMat[i] * m.oMat[j] == m.oMat[j] * m.oMat[i])) ++bad;
    auto perm = W.conjugationOnGenerators(ogens[i].lift);
    for (int s = 0; s < nGen; ++s)
      if (!(m.oMat[i] * m.sMat[s] * m.oMatInv[i] == m.sMat[perm[s]])) ++bad;
  }
  return bad;
}

FDModule buildM(const ParahoricDatum& pd, const Character& chi) {
  validateCharacter(pd, chi);
  const Weyl& WJ = pd.weylJ();
  int n = int(pd.orbit().size());
  FDModule m;
  m.W = &WJ;
  m.dim = n;
  for (int s = 0; s < WJ.numGenerators(); ++s) {
    QMat a(n, n);
    for (int p = 0; p < n; ++p)
      if (std::binary_search(pd.orbit()[p].begin(), pd.orbit()[p].end(), s)) a(p, p) = -1;
    m.sMat.push_back(a);
  }
  const auto& ogens = WJ.omegaGens();
  for (const auto& g : ogens) {
    QMat a(n, n);
    for (int p = 0; p < n; ++p) {
      auto np = applyPerm(WJ.conjugationOnGenerators(g.lift), pd.orbit()[p]);
      int q = -1;
      for (int k = 0; k < n; ++k)
        if (pd.orbit()[k] == np) {
          q = k;
          break;
        }
      AffineElement omega =
          WJ.multiply(WJ.inverse(pd.cosetReps()[q]), WJ.multiply(g.lift, pd.cosetReps()[p]));
      a(q, p) = chiEval(pd, chi, omega);
    }
    m.oMat.push_back(a);
    auto inv = a.inverse();
    if (!inv) throw std::logic_error("buildM: Omega generator not invertible");
    m.oMatInv.push_back(*inv);
  }
  if (verifyRelations(m) != 0) throw std::logic_error("buildM: relations violated");
  return m;
}

std::vector<int> minimalCosetReps(const RootDatum& rd, const std::vector<int>& J) {
  std::vector<int> out;
  for (int w = 0; w < rd.order(); ++w) {
    bool minimal = true;
    for (int j : J)
      if (rd.w0Length(rd.w0(w).rightMul[j]) < rd.w0Length(w)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(w);
  }
  return out;
}

IVec deepWeight(const RootDatum& rd, const std::vector<int>& J, Int scale) {
  int n = rd.numSimple();
  QMat p(n, rd.rank());
  QVec target(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < rd.rank(); ++k) {
      IVec unit(rd.rank(), 0);
      unit[k] = 1;
      p(i, k) = Rat(rd.pair(unit, rd.simpleCoroots()[i]));
    }
    bool inJ = std::binary_search(J.begin(), J.end(), i);
    // distinct off-J values keep a second call with a different scale
    // linearly independent of the first whenever possible
    target[i] = inJ ? Rat(0) : Rat(scale + i);
  }
  auto sol = p.solve(target);
  if (!sol) throw std::logic_error("deepWeight: unsolvable");
  BigInt lcm = 1;
  for (const auto& v : *sol)
    lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(v)));
  IVec out(rd.rank());
  for (int k = 0; k < rd.rank(); ++k) {
    Rat v = (*sol)[k] * Rat(lcm);
    out[k] = Int(boost::multiprecision::numerator(v));
  }
  for (int i = 0; i < n; ++i) {
    Int pr = rd.pair(out, rd.simpleCoroots()[i]);
    bool inJ = std::binary_search(J.begin(), J.end(), i);
    if ((inJ && pr != 0) || (!inJ && pr <= 0)) throw std::logic_error("deepWeight: bad pairing");
  }
  return out;
}

namespace {

/// T_x tensor m -> eps * T_d tensor (factor) m by the deep-shift rewrite:
/// T_x tensor m = (T_x T_{t^lambda}) tensor (T^J_{t^lambda})^-1 m with
/// lambda J-positive, then split the single surviving term as d * u with
/// u J-positive and lengths additive.
struct Resolved {
  int d;
  Rat eps;
  QMat factor;
};

Resolved resolveTensor(const Weyl& W, const std::vector<int>& J, const FDModule& M,
                       const AffineElement& x, const IVec& lambda0) {
  const RootDatum& rd = W.datum();
  Int b0 = 1;
  for (int i = 0; i < rd.numSimple(); ++i) {
    Int p = rd.pair(x.lambda, rd.simpleCoroots()[i]);
    b0 = std::max(b0, (p < 0 ? -p : p) + 1);
  }
  for (Int b = b0; b <= (Int(1) << 10) * b0; b *= 2) {
    IVec lam(lambda0.size());
    for (size_t k = 0; k < lam.size(); ++k) lam[k] = b * lambda0[k];
    AffineElement t = W.translation(lam);
    HeckeElt h = tMultiply(W, heckeBasis(x, HeckeMode::Zero), heckeBasis(t, HeckeMode::Zero));
    if (h.terms.size() != 1) throw std::logic_error("resolveTensor: product not a single term");
    const auto& [z, c] = *h.terms.begin();
    auto cs = W.cosetDecompose(z, J);
    if (W.length(z) != Int(rd.w0Length(cs.d)) + W.length(cs.u)) continue;
    if (!W.isJPositive(cs.u, J)) continue;
    QMat au = actionMatrix(M, cs.u);
    auto tinv = omegaMatrix(M, t).inverse();
    if (!tinv) throw std::logic_error("resolveTensor: translation not invertible on M");
    return {cs.d, Rat(c.coeff(0)), au * *tinv};
  }
  throw std::logic_error("resolveTensor: deep-shift cap exceeded");
}

}  // namespace

FDModule inducePi(const ParahoricDatum& pd, const Character& chi) {
  const RootDatum& rd = pd.datum();
  const Weyl& W = rd.weylFull();
  FDModule M = buildM(pd, chi);
  std::vector<int> reps = minimalCosetReps(rd, pd.J());
  int nd = int(reps.size());
  std::map<int, int> drank;
  for (int i = 0; i < nd; ++i) drank[reps[i]] = i;
  IVec lambda0 = deepWeight(rd, pd.J(), 1);

  FDModule pi;
  pi.W = &W;
  pi.dim = nd * M.dim;

  auto genMatrix = [&](const AffineElement& g) {
    QMat out(pi.dim, pi.dim);
    for (int di = 0; di < nd; ++di) {
      HeckeElt h = tMultiply(W, heckeBasis(g, HeckeMode::Zero),
                             heckeBasis(W.fromFinite(reps[di]), HeckeMode::Zero));
      if (h.isZero()) continue;
      if (h.terms.size() != 1) throw std::logic_error("inducePi: product not a single term");
      const auto& [x, c] = *h.terms.begin();
      Rat eps = Rat(c.coeff(0));
      Resolved res = resolveTensor(W, pd.J(), M, x, lambda0);
      int dj = drank.at(res.d);
      for (int i = 0; i < M.dim; ++i)
        for (int j = 0; j < M.dim; ++j)
          out(dj * M.dim + i, di * M.dim + j) = eps * res.eps * res.factor(i, j);
    }
    return out;
  };

  for (int s = 0; s < W.numGenerators(); ++s) pi.sMat.push_back(genMatrix(W.generator(s)));
  for (const auto& g : W.omegaGens()) {
    QMat a = genMatrix(g.lift);
    auto inv = a.inverse();
    if (!inv) throw std::logic_error("inducePi: Omega generator not invertible");
    pi.oMat.push_back(a);
    pi.oMatInv.push_back(*inv);
  }
  if (verifyRelations(pi) != 0) throw std::logic_error("inducePi: relations violated");
  return pi;
}

FDModule iotaPullback(const FDModule& m) {
  FDModule out = m;
  QMat id = QMat::identity(m.dim);
  for (auto& a : out.sMat) a = (a + id) * Rat(-1);
  return out;
}

// --- class tables ------------------------------------------------------------

ClassTable buildClassTable(const Weyl& W, const std::vector<CyclicShiftClass>& classes, int L) {
  ClassTable t;
  t.W = &W;
  t.L = L;
  for (const auto& cls : classes) {
    ClassData row;
    row.cls = cls;
    row.pair = standardPairOf(W, cls);
    row.canonGamma = canonicalGammaOf(W.datum().weyl(row.pair.J), row.pair.gamma);
    t.rows.push_back(std::move(row));
  }
  return t;
}

ClassTable buildClassTable(const Weyl& W, int L) {
  return buildClassTable(W, enumerateMinClasses(W, L), L);
}

CharVector charVector(const ClassTable& table, const FDModule& m) {
  CharVector out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) out.push_back(traceOf(m, row.cls.rep));
  return out;
}

CharFormulaResult charFormula(const Weyl& W, const ClassData& row, const ParahoricDatum& pd,
                              const Character& chi) {
  const auto& Jx = row.pair.J;
  if (!isSubset(pd.J(), Jx)) return {true, 0};
  if (pd.J() != Jx) return {false, 0};  // empty or intermediate J: not covered

  const Weyl& WJ = pd.weylJ();
  const AffineElement& x = row.pair.x;
  if (WJ.length(x) != 0) throw std::logic_error("charFormula: x not length zero in W_J");
  if (!pd.stabilizes(x)) return {true, 0};

  Int count = 0;
  for (const auto& tau : pd.cosetReps()) {
    auto image = applyPerm(WJ.conjugationOnGenerators(WJ.inverse(tau)), row.pair.gamma);
    if (isSubset(image, pd.gamma())) ++count;
  }
  Rat sign = ((row.cls.length - W.length(x)) % 2 == 0) ? 1 : -1;
  return {true, sign * chiEval(pd, chi, x) * Rat(count)};
}

// --- M_J and M_{J,Gamma} ------------------------------------------------------

namespace {

QMat restrictTo(const QMat& basis, const QMat& full) {
  auto r = basis.solveMat(full * basis);
  if (!r) throw std::logic_error("restrictTo: subspace not invariant");
  return *r;
}

Submodule mJWith(const FDModule& m, const std::vector<int>& J, const IVec& mu) {
  const Weyl& W = *m.W;
  const RootDatum& rd = W.datum();
  const Weyl& WJ = rd.weyl(J);
  QMat a = actionMatrix(m, W.translation(mu));
  QMat p = a.pow(m.dim).columnSpaceBasis();
  Submodule sub;
  sub.inclusion = p;
  if (p.cols() == 0) {
    sub.mod = zeroModule(WJ);
    return sub;
  }
  QMat ar = restrictTo(p, a);
  auto arInv = ar.inverse();
  if (!arInv) throw std::logic_error("mJFunctor: t^mu not invertible on stable image");

  AffineElement tmu = W.translation(mu);
  auto levMatrix = [&](const AffineElement& z) {
    AffineElement zt = z;
    int k = 0;
    for (; k <= 64; ++k) {
      if (W.isJPositive(zt, J) &&
          W.length(W.multiply(zt, tmu)) == W.length(zt) + W.length(tmu))
        break;
      zt = W.multiply(zt, tmu);
    }
    if (k > 64) throw std::logic_error("mJFunctor: shift cap exceeded");
    return restrictTo(p, actionMatrix(m, zt)) * arInv->pow(k);
  };

  FDModule& mj = sub.mod;
  mj.W = &WJ;
  mj.dim = p.cols();
  for (int s = 0; s < WJ.numGenerators(); ++s) mj.sMat.push_back(levMatrix(WJ.generator(s)));
  for (const auto& g : WJ.omegaGens()) {
    QMat gm = levMatrix(g.lift);
    auto inv = gm.inverse();
    if (!inv) throw std::logic_error("mJFunctor: Omega generator not invertible");
    mj.oMat.push_back(gm);
    mj.oMatInv.push_back(*inv);
  }
  if (verifyRelations(mj) != 0) throw std::logic_error("mJFunctor: relations violated");
  return sub;
}

bool sameColumnSpace(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows()) return false;
  QMat cat(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) cat(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) cat(i, a.cols() + j) = b(i, j);
  }
  return cat.rank() == a.rank() && a.rank() == b.rank();
}

}  // namespace

Submodule mJFunctor(const FDModule& m, const std::vector<int>& J) {
  const RootDatum& rd = m.W->datum();
  Submodule sub = mJWith(m, J, deepWeight(rd, J, 1));
  // independent second choice of mu must give the same module
  Submodule check = mJWith(m, J, deepWeight(rd, J, 2));
  if (!sameColumnSpace(sub.inclusion, check.inclusion))
    throw std::logic_error("mJFunctor: stable image depends on mu");
  if (sub.mod.dim != 0) {
    auto expr = sub.inclusion.solveMat(check.inclusion);
    if (!expr) throw std::logic_error("mJFunctor: basis change failed");
    auto exprInv = expr->inverse();
    if (!exprInv) throw std::logic_error("mJFunctor: basis change singular");
    for (size_t s = 0; s < sub.mod.sMat.size(); ++s)
      if (!(sub.mod.sMat[s] == *expr * check.mod.sMat[s] * *exprInv))
        throw std::logic_error("mJFunctor: action depends on mu");
    for (size_t i = 0; i < sub.mod.oMat.size(); ++i)
      if (!(sub.mod.oMat[i] == *expr * check.mod.oMat[i] * *exprInv))
        throw std::logic_error("mJFunctor: Omega action depends on mu");
  }
  return sub;
}

GammaModule mJGamma(const Submodule& mj, const ParahoricDatum& pd) {
  GammaModule g;
  g.mj = &mj;
  if (mj.mod.dim == 0) {
    g.inclusion = QMat(0, 0);
    return g;
  }
  AffineElement wg = pd.gamma().empty() ? pd.weylJ().identity() : pd.weylJ().longestOf(pd.gamma());
  g.inclusion = actionMatrix(mj.mod, wg).columnSpaceBasis();
  g.dim = g.inclusion.cols();
  return g;
}

Rat traceOnGamma(const GammaModule& g, const AffineElement& x) {
  if (g.dim == 0) return 0;
  return restrictTo(g.inclusion, omegaMatrix(g.mj->mod, x)).trace();
}

// --- aleph and decomposition --------------------------------------------------

bool alephLess(const RootDatum& rd, const AlephPair& a, const AlephPair& b) {
  if (a.J != b.J) return isSubset(a.J, b.J);
  if (a.gamma.size() <= b.gamma.size()) return false;
  auto orb = gammaOrbit(rd.weyl(b.J), b.gamma);
  for (const auto& point : orb.points)
    if (isSubset(point, a.gamma)) return true;
  return false;
}

PiCandidate makeCandidate(const RootDatum& rd, const std::vector<int>& J,
                          const std::vector<int>& gamma, const Character& chi,
                          const ClassTable& table) {
  PiCandidate c;
  c.pd = std::make_shared<ParahoricDatum>(rd, J, gamma);
  c.chi = chi;
  c.pi = inducePi(*c.pd, chi);
  c.chvec = charVector(table, c.pi);
  std::ostringstream os;
  os << "pi[J=" << setStr(J) << ",G=" << setStr(gamma) << ",chi=(";
  for (size_t j = 0; j < chi.values.size(); ++j)
    os << (j ? "," : "") << ratToString(chi.values[j]);
  os << ")]";
  c.name = os.str();
  return c;
}

std::vector<PiCandidate> allCandidates(const RootDatum& rd, const ClassTable& table,
                                       const std::vector<Rat>& freeValues) {
  std::vector<PiCandidate> out;
  int n = rd.numSimple();
  for (int jm = 0; jm < (1 << n); ++jm) {
    std::vector<int> J;
    for (int i = 0; i < n; ++i)
      if (jm & (1 << i)) J.push_back(i);
    const Weyl& WJ = rd.weyl(J);
    int ng = WJ.numGenerators();
    for (int gm = 0; gm < (1 << ng); ++gm) {
      std::vector<int> gamma;
      for (int s = 0; s < ng; ++s)
        if (gm & (1 << s)) gamma.push_back(s);
      if (!WJ.finiteType(gamma)) continue;
      if (canonicalGammaOf(WJ, gamma) != gamma) continue;  // one per ~-orbit
      ParahoricDatum pd(rd, J, gamma);
      for (const auto& chi : characterTestSet(pd, freeValues))
        out.push_back(makeCandidate(rd, J, gamma, chi, table));
    }
  }
  return out;
}

std::vector<PiCandidate> finiteCandidates(const RootDatum& rd, const ClassTable& table) {
  std::vector<PiCandidate> out;
  for (auto& c : allCandidates(rd, table, {Rat(1)})) {
    bool free_ = false;
    for (const auto& g : c.pd->stabGens())
      if (g.order == 0) free_ = true;
    if (!free_) out.push_back(std::move(c));
  }
  return out;
}

std::string rowLabel(const ClassTable& table, int idx) {
  int pos = 0;
  for (int i = 0; i < idx; ++i)
    if (table.rows[i].cls.length == table.rows[idx].cls.length) ++pos;
  return std::to_string(table.rows[idx].cls.length) + "." + std::to_string(pos);
}

DecomposeResult decompose(const ClassTable& table, const CharVector& v,
                          const std::vector<PiCandidate>& candidates) {
  const RootDatum& rd = table.W->datum();
  DecomposeResult res;
  res.coeff.assign(candidates.size(), Rat(0));
  CharVector cur = v;

  for (int round = 0; round < 64; ++round) {
    std::set<AlephPair> aleph;
    for (size_t i = 0; i < table.rows.size(); ++i)
      if (cur[i] != 0) aleph.insert({table.rows[i].pair.J, table.rows[i].canonGamma});
    if (aleph.empty()) {
      res.ok = true;
      return res;
    }
    std::vector<AlephPair> minimal;
    for (const auto& p : aleph) {
      bool isMin = true;
      for (const auto& q : aleph)
        if (!(q == p) && alephLess(rd, q, p)) {
          isMin = false;
          break;
        }
      if (isMin) minimal.push_back(p);
    }

    CharVector delta(cur.size(), Rat(0));
    for (const auto& p : minimal) {
      std::vector<size_t> cand;
      for (size_t c = 0; c < candidates.size(); ++c)
        if (candidates[c].pd->J() == p.J && candidates[c].pd->canonicalGamma() == p.gamma)
          cand.push_back(c);
      if (cand.empty()) {
        res.error = "no candidate for minimal pair J=" + setStr(p.J) + " Gamma=" + setStr(p.gamma);
        return res;
      }
      // Tr(T_Sigma, pi_{J,Gamma,chi}) = (-1)^{l - l(x)} chi(x) on matching
      // classes; solve the chi-multiplicities from the x-values seen.
      std::map<AffineElement, Rat> fx;
      for (size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        if (row.pair.J != p.J || row.canonGamma != p.gamma) continue;
        Rat sign = ((row.cls.length - table.W->length(row.pair.x)) % 2 == 0) ? 1 : -1;
        Rat f = sign * cur[i];
        auto it = fx.find(row.pair.x);
        if (it == fx.end())
          fx[row.pair.x] = f;
        else if (it->second != f) {
          res.error = "inconsistent traces across classes sharing a standard pair";
          return res;
        }
      }
      QMat a(int(fx.size()), int(cand.size()));
      QVec b;
      int r = 0;
      for (const auto& [x, f] : fx) {
        for (size_t c = 0; c < cand.size(); ++c)
          a(r, int(c)) = chiEval(*candidates[cand[c]].pd, candidates[cand[c]].chi, x);
        b.push_back(f);
        ++r;
      }
      if (a.rank() < int(cand.size())) {
        res.error = "underdetermined chi-multiplicities at pair J=" + setStr(p.J) +
                    " Gamma=" + setStr(p.gamma) + " (raise L or trim candidates)";
        return res;
      }
      auto sol = a.solve(b);
      if (!sol) {
        res.error = "no chi-multiplicity solution at pair J=" + setStr(p.J) +
                    " Gamma=" + setStr(p.gamma);
        return res;
      }
      for (size_t c = 0; c < cand.size(); ++c) {
        const Rat& coef = (*sol)[c];
        if (boost::multiprecision::denominator(coef) != 1) {
          res.error = "non-integer multiplicity at pair J=" + setStr(p.J);
          return res;
        }
        res.coeff[cand[c]] += coef;
        for (size_t i = 0; i < cur.size(); ++i) delta[i] += coef * candidates[cand[c]].chvec[i];
      }
    }
    bool moved = false;
    for (size_t i = 0; i < cur.size(); ++i) {
      if (delta[i] != 0) moved = true;
      cur[i] -= delta[i];
    }
    if (!moved) {
      size_t i = 0;
      while (i < cur.size() && cur[i] == 0) ++i;
      res.error = "peeling stalled; smallest offending class index " + std::to_string(i);
      return res;
    }
  }
  res.error = "peeling did not terminate";
  return res;
}

bool isRigid(const ClassTable& table, const CharVector& v) {
  std::vector<int> full = table.W->datum().fullJ();
  for (size_t i = 0; i < table.rows.size(); ++i)
    if (table.rows[i].pair.J != full && v[i] != 0) return false;
  return true;
}

SSReport isSupersingular(const ClassTable& table, const Cocenter& coc, const FDModule& m,
                         const std::vector<PiCandidate>& candidates,
                         const std::optional<std::vector<int>>& gamma) {
  if (coc.maxLength() != table.L || coc.classes().size() != table.rows.size())
    throw std::invalid_argument("isSupersingular: table and cocenter bounds differ");
  const Weyl& W = *table.W;
  CharVector v = charVector(table, m);

  SSReport rep;
  rep.traces = true;
  for (const auto& nss : coc.nssBasisUpTo()) {
    Rat acc = 0;
    for (const auto& [cls, c] : nss.coeff) acc += v[cls] * Rat(c);
    if (acc != 0) {
      rep.traces = false;
      break;
    }
  }

  // criterion (1): E_w kills the module beyond the Cor-bound window of its
  // own Gamma; decidable when Gamma and its complement are finite type and
  // the window reaches into the table
  std::vector<int> allGens(W.numGenerators());
  std::iota(allGens.begin(), allGens.end(), 0);
  if (gamma) {
    std::vector<int> rest;
    for (int s : allGens)
      if (!std::binary_search(gamma->begin(), gamma->end(), s)) rest.push_back(s);
    auto wg = W.subgroupElements(*gamma);
    auto wr = W.subgroupElements(rest);
    if (wg && wr) {
      Int windowLow = 2 * std::max(Int(wg->size()), Int(wr->size()));
      if (windowLow < table.L) {
        rep.eEvaluated = true;
        rep.eKill = true;
        for (const auto& e : W.ball(table.L)) {
          Int l = W.length(e);
          if (l <= windowLow) continue;
          if (!applyHecke(m, eBasis(W, e).zero).isZero()) {
            rep.eKill = false;
            break;
          }
        }
      }
    }
  }

  // criterion (3): span over (F0, Gamma) with both Gamma and its
  // complement of finite type
  std::vector<int> full = W.datum().fullJ();
  std::vector<PiCandidate> restricted;
  for (const auto& c : candidates) {
    if (c.pd->J() != full) continue;
    std::vector<int> rest;
    for (int s : allGens)
      if (!std::binary_search(c.pd->gamma().begin(), c.pd->gamma().end(), s)) rest.push_back(s);
    if (!W.finiteType(rest)) continue;
    restricted.push_back(c);
  }
  if (!restricted.empty()) {
    rep.spanEvaluated = true;
    rep.span = decompose(table, v, restricted).ok;
  }

  if (rep.eEvaluated && rep.eKill != rep.traces)
    throw std::logic_error("supersingularity criteria (1) and (2) disagree");
  if (rep.spanEvaluated && rep.span != rep.traces)
    throw std::logic_error("supersingularity criteria (2) and (3) disagree");
  return rep;
}

}  // namespace hecke0
