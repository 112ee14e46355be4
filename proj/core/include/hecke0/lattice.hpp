#pragma once

#include <hecke0/linalg.hpp>
#include <hecke0/numeric.hpp>

#include <vector>

namespace hecke0 {

/// Smith normal form U * A * V = D with U, V unimodular and D diagonal
/// (diagonal entries nonnegative, each dividing the next).
struct SmithForm {
  IMat u;  // rows x rows
  IMat v;  // cols x cols
  IMat d;  // rows x cols
};

SmithForm smithNormalForm(const IMat& a);

/// Column-style Hermite normal form of the lattice spanned by the columns
/// of `gens` (each gens[i] is a generator, given as a row vector here).
/// Returns a square lower-triangular basis matrix (columns are the basis)
/// when the lattice has full rank; diagonal entries are positive.
struct HermiteBasis {
  IMat basis;       // n x n, columns form the lattice basis
  Int index = 0;    // [Z^n : lattice] = product of diagonal entries
  bool fullRank = false;
};

HermiteBasis hermiteBasis(const std::vector<IVec>& gens, int dim);

/// Reduce v modulo a full-rank Hermite basis; the result is the canonical
/// residue with 0 <= r_i < basis[i][i] after elimination from the top row.
IVec reduceModHermite(const IVec& v, const IMat& basis);

/// Enumerate all canonical residues of Z^n modulo the lattice.
std::vector<IVec> residues(const HermiteBasis& h);

/// Membership of v in the column lattice of a full-rank Hermite basis.
bool inLattice(const IVec& v, const IMat& basis);

/// Integer coordinates of v in the column basis (requires membership).
IVec latticeCoords(const IVec& v, const IMat& basis);

IMat imatMul(const IMat& a, const IMat& b);
IVec imatApply(const IMat& a, const IVec& v);
IMat imatIdentity(int n);

}  // namespace hecke0
