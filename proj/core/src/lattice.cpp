#include <hecke0/lattice.hpp>

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace hecke0 {

IMat imatIdentity(int n) {
  IMat m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat imatMul(const IMat& a, const IMat& b) {
  int n = int(a.size()), k = int(b.size()), m = k ? int(b[0].size()) : 0;
  IMat r(n, IVec(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

IVec imatApply(const IMat& a, const IVec& v) {
  IVec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

SmithForm smithNormalForm(const IMat& a) {
  int n = int(a.size());
  int m = n ? int(a[0].size()) : 0;
  SmithForm f{imatIdentity(n), imatIdentity(m), a};
  IMat& d = f.d;

  auto swapRows = [&](int i, int j) {
    std::swap(d[i], d[j]);
    std::swap(f.u[i], f.u[j]);
  };
  auto swapCols = [&](int i, int j) {
    for (int r = 0; r < n; ++r) std::swap(d[r][i], d[r][j]);
    for (int r = 0; r < m; ++r) std::swap(f.v[r][i], f.v[r][j]);
  };
  auto addRow = [&](int dst, int src, Int c) {  // row dst += c * row src
    for (int j = 0; j < m; ++j) d[dst][j] += c * d[src][j];
    for (int j = 0; j < n; ++j) f.u[dst][j] += c * f.u[src][j];
  };
  auto addCol = [&](int dst, int src, Int c) {
    for (int i = 0; i < n; ++i) d[i][dst] += c * d[i][src];
    for (int i = 0; i < m; ++i) f.v[i][dst] += c * f.v[i][src];
  };
  auto negateRow = [&](int i) {
    for (int j = 0; j < m; ++j) d[i][j] = -d[i][j];
    for (int j = 0; j < n; ++j) f.u[i][j] = -f.u[i][j];
  };

  int t = 0;
  while (t < n && t < m) {
    // find a nonzero pivot
    int pi = -1, pj = -1;
    for (int i = t; i < n && pi < 0; ++i)
      for (int j = t; j < m; ++j)
        if (d[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != t) swapRows(pi, t);
    if (pj != t) swapCols(pj, t);
    bool again = true;
    while (again) {
      again = false;
      for (int i = t + 1; i < n; ++i)
        while (d[i][t] != 0) {
          Int q = d[i][t] / d[t][t];
          addRow(i, t, -q);
          if (d[i][t] != 0) {
            swapRows(i, t);
            again = true;
          }
        }
      for (int j = t + 1; j < m; ++j)
        while (d[t][j] != 0) {
          Int q = d[t][j] / d[t][t];
          addCol(j, t, -q);
          if (d[t][j] != 0) {
            swapCols(j, t);
            again = true;
          }
        }
    }
    if (d[t][t] < 0) negateRow(t);
    ++t;
  }
  // enforce divisibility chain
  for (int i = 0; i + 1 < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      if (d[j][j] % d[i][i] == 0) continue;
      // fold d[j][j] into column i and redo the corner
      addCol(i, j, 1);
      // re-eliminate the 2x2 corner (rows/cols i..j) with euclid steps
      while (d[j][i] != 0) {
        Int q = d[i][i] != 0 ? d[j][i] / d[i][i] : 0;
        addRow(j, i, -q);
        if (d[j][i] != 0) swapRows(i, j);
      }
      while (d[i][j] != 0) {
        Int q = d[i][j] / d[i][i];
        addCol(j, i, -q);
        if (d[i][j] != 0) swapCols(i, j);
      }
      if (d[i][i] < 0) negateRow(i);
      if (d[j][j] < 0) negateRow(j);
      j = i;  // recheck the chain from here
    }
  }
  return f;
}

HermiteBasis hermiteBasis(const std::vector<IVec>& gens, int dim) {
  // columns of `work` are generators; apply unimodular column operations
  IMat work(dim, IVec(gens.size(), 0));
  for (size_t g = 0; g < gens.size(); ++g)
    for (int i = 0; i < dim; ++i) work[i][g] = gens[g][i];

  int cols = int(gens.size());
  auto addCol = [&](int dst, int src, Int c) {
    for (int i = 0; i < dim; ++i) work[i][dst] += c * work[i][src];
  };
  auto swapCol = [&](int a, int b) {
    for (int i = 0; i < dim; ++i) std::swap(work[i][a], work[i][b]);
  };

  int lead = 0;
  for (int row = 0; row < dim && lead < cols; ++row) {
    // euclid across columns lead..cols-1 on this row
    while (true) {
      int p = -1;
      for (int j = lead; j < cols; ++j)
        if (work[row][j] != 0 && (p < 0 || std::abs(work[row][j]) < std::abs(work[row][p]))) p = j;
      if (p < 0) break;
      if (p != lead) swapCol(p, lead);
      bool clean = true;
      for (int j = lead + 1; j < cols; ++j) {
        if (work[row][j] == 0) continue;
        Int q = work[row][j] / work[row][lead];
        addCol(j, lead, -q);
        if (work[row][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (work[row][lead] != 0) {
      if (work[row][lead] < 0)
        for (int i = 0; i < dim; ++i) work[i][lead] = -work[i][lead];
      // reduce earlier columns at this row to the canonical range
      for (int j = 0; j < lead; ++j) {
        Int q = work[row][j] / work[row][lead];
        if (work[row][j] - q * work[row][lead] < 0) q -= 1;
        if (q != 0) addCol(j, lead, -q);
      }
      ++lead;
    }
  }

  HermiteBasis h;
  h.fullRank = (lead == dim);
  if (!h.fullRank) return h;
  h.basis = IMat(dim, IVec(dim, 0));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) h.basis[i][j] = work[i][j];
  h.index = 1;
  // after the sweep, column j has its first nonzero at row j
  for (int i = 0; i < dim; ++i) h.index *= h.basis[i][i];
  return h;
}

IVec reduceModHermite(const IVec& v, const IMat& basis) {
  int n = int(basis.size());
  IVec r = v;
  for (int i = 0; i < n; ++i) {
    Int p = basis[i][i];
    assert(p > 0);
    Int q = r[i] / p;
    if (r[i] - q * p < 0) q -= 1;
    for (int k = i; k < n; ++k) r[k] -= q * basis[k][i];
  }
  return r;
}

bool inLattice(const IVec& v, const IMat& basis) {
  return isZeroVec(reduceModHermite(v, basis));
}

IVec latticeCoords(const IVec& v, const IMat& basis) {
  int n = int(basis.size());
  IVec c(n, 0), r = v;
  for (int i = 0; i < n; ++i) {
    assert(r[i] % basis[i][i] == 0);
    Int q = r[i] / basis[i][i];
    c[i] = q;
    for (int k = i; k < n; ++k) r[k] -= q * basis[k][i];
  }
  assert(isZeroVec(r));
  return c;
}

std::vector<IVec> residues(const HermiteBasis& h) {
  int n = int(h.basis.size());
  std::vector<IVec> out;
  IVec cur(n, 0);
  // odometer over 0 <= cur[i] < basis[i][i], canonicalized per step
  while (true) {
    out.push_back(reduceModHermite(cur, h.basis));
    int i = 0;
    while (i < n) {
      if (++cur[i] < h.basis[i][i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  // dedupe (reduction may identify odometer points)
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (Int(out.size()) != h.index) throw std::logic_error("residue enumeration mismatch");
  return out;
}

}  // namespace hecke0
