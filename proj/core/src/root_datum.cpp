#include <hecke0/root_datum.hpp>

#include <hecke0/lattice.hpp>
#include <hecke0/weyl.hpp>

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>

namespace hecke0 {

namespace {

constexpr int kMaxRoots = 4096;
constexpr int kMaxGroup = 200000;

Int det(IMat m) {
  // fraction-free Gaussian elimination on a small integer matrix
  int n = int(m.size());
  Rat d = 1;
  QMat q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q(i, j) = m[i][j];
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (q(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(q(p, j), q(c, j));
      d = -d;
    }
    d *= q(c, c);
    Rat inv = Rat(1) / q(c, c);
    for (int i = c + 1; i < n; ++i) {
      Rat f = q(i, c) * inv;
      for (int j = c; j < n; ++j) q(i, j) -= f * q(c, j);
    }
  }
  assert(denominator(d) == 1);
  return Int(numerator(d));
}

}  // namespace

Int RootDatum::pair(const IVec& x, const IVec& y) const {
  Int s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += x[i] * pairing_[i][j] * y[j];
  return s;
}

Rat RootDatum::pair(const QVec& x, const IVec& y) const {
  Rat s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += x[i] * Rat(pairing_[i][j] * y[j]);
  return s;
}

std::shared_ptr<const RootDatum> RootDatum::build(std::string name, int rank, IMat pairing,
                                                  std::vector<IVec> simpleRoots,
                                                  std::vector<IVec> simpleCoroots) {
  auto rd = std::shared_ptr<RootDatum>(new RootDatum());
  rd->name_ = std::move(name);
  rd->rank_ = rank;
  rd->pairing_ = std::move(pairing);
  rd->simpleRoots_ = std::move(simpleRoots);
  rd->simpleCoroots_ = std::move(simpleCoroots);

  if (int(rd->pairing_.size()) != rank) throw DatumError("pairing matrix has wrong size");
  for (auto& row : rd->pairing_)
    if (int(row.size()) != rank) throw DatumError("pairing matrix has wrong size");
  if (rd->simpleRoots_.size() != rd->simpleCoroots_.size())
    throw DatumError("simple roots and coroots must correspond");
  Int dt = det(rd->pairing_);
  if (dt != 1 && dt != -1) throw DatumError("pairing is not perfect (determinant must be +-1)");

  int ns = rd->numSimple();
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j) {
      Int c = rd->pair(rd->simpleRoots_[i], rd->simpleCoroots_[j]);
      if (i == j && c != 2) throw DatumError("<alpha_i, alpha_i_vee> must equal 2");
      if (i != j && c > 0) throw DatumError("Cartan matrix must be nonpositive off-diagonal");
    }

  rd->derive();
  return rd;
}

void RootDatum::derive() {
  int ns = numSimple();

  // close the simple roots (and matching coroots) under simple reflections
  std::map<IVec, int> seen;
  for (int i = 0; i < ns; ++i) {
    roots_.push_back(simpleRoots_[i]);
    coroots_.push_back(simpleCoroots_[i]);
    IVec coord(ns, 0);
    coord[i] = 1;
    rootCoords_.push_back(coord);
    corootCoords_.push_back(coord);
    seen[simpleRoots_[i]] = i;
  }
  for (size_t k = 0; k < roots_.size(); ++k) {
    for (int i = 0; i < ns; ++i) {
      Int c = pair(roots_[k], simpleCoroots_[i]);
      IVec r = subVec(roots_[k], scaleVec(c, simpleRoots_[i]));
      if (seen.count(r)) continue;
      Int cv = pair(simpleRoots_[i], coroots_[k]);
      IVec rv = subVec(coroots_[k], scaleVec(cv, simpleCoroots_[i]));
      IVec coord = rootCoords_[k];
      coord[i] -= c;
      IVec coordV = corootCoords_[k];
      coordV[i] -= cv;
      seen[r] = int(roots_.size());
      roots_.push_back(r);
      coroots_.push_back(rv);
      rootCoords_.push_back(coord);
      corootCoords_.push_back(coordV);
      if (int(roots_.size()) > kMaxRoots)
        throw DatumError("Cartan matrix is not of finite type (root closure diverges)");
    }
  }

  // sort: positive roots (all coords >= 0) first, by height then lex
  std::vector<int> order(roots_.size());
  std::iota(order.begin(), order.end(), 0);
  auto isPos = [&](int i) {
    for (Int c : rootCoords_[i])
      if (c < 0) return false;
    return true;
  };
  auto height = [&](int i) {
    Int h = 0;
    for (Int c : rootCoords_[i]) h += c;
    return h;
  };
  int npos = 0;
  for (size_t i = 0; i < roots_.size(); ++i)
    if (isPos(int(i))) ++npos;
  if (2 * npos != int(roots_.size()))
    throw DatumError("root system is not reduced/consistent: R != R+ u -R+");
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (isPos(a) != isPos(b)) return isPos(a);
    if (height(a) != height(b)) return isPos(a) ? height(a) < height(b) : height(a) > height(b);
    return rootCoords_[a] < rootCoords_[b];
  });
  // negative roots mirror the positive ones
  std::vector<int> negOf(roots_.size());
  {
    std::map<IVec, int> pos;
    for (int k = 0; k < npos; ++k) pos[roots_[order[k]]] = k;
    std::vector<int> fixed(order.begin(), order.begin() + npos);
    for (size_t i = 0; i < roots_.size(); ++i) {
      if (isPos(int(i))) continue;
      auto it = pos.find(negVec(roots_[i]));
      assert(it != pos.end());
      negOf[it->second] = int(i);
    }
    for (int k = 0; k < npos; ++k) fixed.push_back(negOf[k]);
    order = fixed;
  }
  {
    std::vector<IVec> r2, c2, k2, kv2;
    for (int idx : order) {
      r2.push_back(roots_[idx]);
      c2.push_back(coroots_[idx]);
      k2.push_back(rootCoords_[idx]);
      kv2.push_back(corootCoords_[idx]);
    }
    roots_ = r2;
    coroots_ = c2;
    rootCoords_ = k2;
    corootCoords_ = kv2;
  }
  numPos_ = npos;
  for (size_t i = 0; i < roots_.size(); ++i) rootIdx_[roots_[i]] = int(i);
  for (size_t i = 0; i < roots_.size(); ++i)
    if (pair(roots_[i], coroots_[i]) != 2) throw DatumError("root/coroot bijection broken");

  // components of the Dynkin diagram
  {
    std::vector<int> comp(ns, -1);
    int nc = 0;
    for (int i = 0; i < ns; ++i) {
      if (comp[i] >= 0) continue;
      std::deque<int> q{i};
      comp[i] = nc;
      while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        for (int b = 0; b < ns; ++b)
          if (comp[b] < 0 && pair(simpleRoots_[a], simpleCoroots_[b]) != 0) {
            comp[b] = nc;
            q.push_back(b);
          }
      }
      ++nc;
    }
    components_.assign(nc, {});
    for (int i = 0; i < ns; ++i) components_[comp[i]].push_back(i);
  }

  // rho_vee
  rhoVee_.assign(rank_, Rat(0));
  twoRhoVee_.assign(rank_, 0);
  for (int k = 0; k < numPos_; ++k) twoRhoVee_ = addVec(twoRhoVee_, coroots_[k]);
  for (int i = 0; i < rank_; ++i) rhoVee_[i] = Rat(twoRhoVee_[i], 2);

  // enumerate W0 by shortlex BFS over right multiplication
  std::vector<IMat> gen(ns);
  for (int i = 0; i < ns; ++i) {
    IMat m = imatIdentity(rank_);
    // s_i(v) = v - <v, alpha_i_vee> alpha_i; column action
    for (int c = 0; c < rank_; ++c) {
      IVec e(rank_, 0);
      e[c] = 1;
      Int f = pair(e, simpleCoroots_[i]);
      for (int r = 0; r < rank_; ++r) m[r][c] -= f * simpleRoots_[i][r];
    }
    gen[i] = m;
  }
  w0_.push_back({{}, imatIdentity(rank_), 0, {}, {}});
  w0ByMatrix_[w0_[0].action] = 0;
  for (size_t k = 0; k < w0_.size(); ++k) {
    for (int i = 0; i < ns; ++i) {
      IMat m = imatMul(w0_[k].action, gen[i]);
      if (w0ByMatrix_.count(m)) continue;
      FiniteWeylElement e;
      e.word = w0_[k].word;
      e.word.push_back(i);
      e.action = m;
      w0ByMatrix_[m] = int(w0_.size());
      w0_.push_back(std::move(e));
      if (int(w0_.size()) > kMaxGroup)
        throw DatumError("Cartan matrix is not of finite type (Weyl group diverges)");
    }
  }
  // multiplication tables and inverses
  for (auto& e : w0_) {
    e.rightMul.resize(ns);
    e.leftMul.resize(ns);
  }
  for (size_t k = 0; k < w0_.size(); ++k)
    for (int i = 0; i < ns; ++i) {
      w0_[k].rightMul[i] = w0ByMatrix_.at(imatMul(w0_[k].action, gen[i]));
      w0_[k].leftMul[i] = w0ByMatrix_.at(imatMul(gen[i], w0_[k].action));
    }
  for (size_t k = 0; k < w0_.size(); ++k) {
    int inv = 0;
    for (auto it = w0_[k].word.rbegin(); it != w0_[k].word.rend(); ++it)
      inv = w0_[inv].rightMul[*it];
    w0_[k].inverse = inv;
  }
  for (size_t k = 0; k < w0_.size(); ++k)
    if (w0Length(int(k)) > w0Length(longest_)) longest_ = int(k);

  // reflections and highest roots
  reflections_.assign(roots_.size(), -1);
  for (size_t r = 0; r < roots_.size(); ++r) {
    IMat m = imatIdentity(rank_);
    for (int c = 0; c < rank_; ++c) {
      IVec e(rank_, 0);
      e[c] = 1;
      Int f = pair(e, coroots_[r]);
      for (int i = 0; i < rank_; ++i) m[i][c] -= f * roots_[r][i];
    }
    auto it = w0ByMatrix_.find(m);
    if (it == w0ByMatrix_.end()) throw DatumError("reflection not found in W0");
    reflections_[r] = it->second;
  }
  highestRoots_.resize(components_.size());
  for (size_t c = 0; c < components_.size(); ++c) {
    int best = -1;
    for (int k = 0; k < numPos_; ++k) {
      bool inComp = true;
      for (int i = 0; i < ns; ++i) {
        bool inC = std::find(components_[c].begin(), components_[c].end(), i) != components_[c].end();
        if (rootCoords_[k][i] != 0 && !inC) inComp = false;
        if (rootCoords_[k][i] == 0 && inC) {
          // fine: component roots may omit some simple roots
        }
      }
      // must involve only this component's simple roots, and at least one
      bool touches = false;
      for (int i : components_[c])
        if (rootCoords_[k][i] != 0) touches = true;
      if (!inComp || !touches) continue;
      if (best < 0) {
        best = k;
        continue;
      }
      // compare coefficientwise
      bool ge = true, le = true;
      for (int i = 0; i < ns; ++i) {
        if (rootCoords_[k][i] < rootCoords_[best][i]) ge = false;
        if (rootCoords_[k][i] > rootCoords_[best][i]) le = false;
      }
      if (ge && !le) best = k;
    }
    assert(best >= 0);
    // verify dominance over every root of the component
    for (int k = 0; k < numPos_; ++k) {
      bool touches = false;
      for (int i : components_[c])
        if (rootCoords_[k][i] != 0) touches = true;
      if (!touches) continue;
      for (int i = 0; i < ns; ++i)
        if (rootCoords_[k][i] > rootCoords_[best][i])
          throw DatumError("highest root is not unique (non-irreducible component?)");
    }
    highestRoots_[c] = best;
  }
}

int RootDatum::rootIndex(const IVec& r) const {
  auto it = rootIdx_.find(r);
  return it == rootIdx_.end() ? -1 : it->second;
}

int RootDatum::w0Multiply(int a, int b) const {
  int r = a;
  for (int s : w0_[b].word) r = w0_[r].rightMul[s];
  return r;
}

IVec RootDatum::w0Act(int a, const IVec& v) const { return imatApply(w0_[a].action, v); }

QVec RootDatum::w0Act(int a, const QVec& v) const {
  QVec r(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (w0_[a].action[i][j] != 0) r[i] += Rat(w0_[a].action[i][j]) * v[j];
  return r;
}

IVec RootDatum::w0ActY(int a, const IVec& y) const {
  // the action on Y is determined by <w x, y> = <x, w^-1 y>: apply the
  // inverse' s transpose-compatible action via root/coroot bookkeeping.
  // For w = s_i: y -> y - <alpha_i, y> alpha_i_vee; compose along the word.
  IVec r = y;
  const auto& word = w0_[a].word;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Int c = pair(simpleRoots_[*it], r);
    r = subVec(r, scaleVec(c, simpleCoroots_[*it]));
  }
  return r;
}

int RootDatum::w0FromMatrix(const IMat& m) const {
  auto it = w0ByMatrix_.find(m);
  return it == w0ByMatrix_.end() ? -1 : it->second;
}

bool RootDatum::sendsToNegative(int w, int rootIdx) const {
  IVec im = w0Act(w, roots_[rootIdx]);
  int idx = this->rootIndex(im);
  assert(idx >= 0);
  return idx >= numPos_;
}

std::vector<int> RootDatum::jOfVector(const QVec& v) const {
  std::vector<int> j;
  for (int i = 0; i < numSimple(); ++i)
    if (pair(v, simpleCoroots_[i]) == 0) j.push_back(i);
  return j;
}

bool RootDatum::isDominant(const QVec& v) const {
  for (int i = 0; i < numSimple(); ++i)
    if (pair(v, simpleCoroots_[i]) < 0) return false;
  return true;
}

std::pair<QVec, int> RootDatum::dominantRep(const QVec& v) const {
  // exchange walk: repeatedly apply a simple reflection making progress;
  // this yields a minimal-length z with z(v) dominant.
  QVec cur = v;
  int z = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < numSimple(); ++i) {
      if (pair(cur, simpleCoroots_[i]) < 0) {
        // apply s_i on the left
        Rat c = pair(cur, simpleCoroots_[i]);
        for (int r = 0; r < rank_; ++r) cur[r] -= c * Rat(simpleRoots_[i][r]);
        z = w0_[z].leftMul[i];
        changed = true;
        break;
      }
    }
  }
  // z is minimal: each step strictly decreases the number of positive
  // coroots paired negatively, and len(z) equals the step count since each
  // left factor adds a new inversion through v.
  return {cur, z};
}

bool RootDatum::xPlusJMembership(const IVec& lambda, const std::vector<int>& J) const {
  QVec q = toQ(lambda);
  if (!isDominant(q)) return false;
  return jOfVector(q) == J;
}

std::vector<int> RootDatum::fullJ() const {
  std::vector<int> j(numSimple());
  std::iota(j.begin(), j.end(), 0);
  return j;
}

const Weyl& RootDatum::weyl(const std::vector<int>& J) const {
  std::lock_guard<std::mutex> lk(cacheMu_);
  auto it = weylCache_.find(J);
  if (it == weylCache_.end())
    it = weylCache_.emplace(J, std::unique_ptr<Weyl>(new Weyl(*this, J))).first;
  return *it->second;
}

const Weyl& RootDatum::weylFull() const { return weyl(fullJ()); }

RootDatum::~RootDatum() = default;

}  // namespace hecke0
