#pragma once

#include <hecke0/weyl.hpp>

#include <vector>

namespace hecke0 {

// Cyclic-shift reduction and class combinatorics on the full extended
// affine Weyl group. All operations take the full Weyl context of a datum
// (RootDatum::weylFull()); enumeration requires finite Omega.

enum class ShiftKind { Preserved, Dropped, NotAStep };

struct ShiftStep {
  int gen;         // generator index into S_aff
  ShiftKind kind;
  AffineElement to;
};

/// A cyclic-shift class of minimal-length elements: closed under
/// length-preserving conjugation by S_aff and conjugation by Omega.
struct CyclicShiftClass {
  AffineElement rep;                  // smallest member by encoding
  std::vector<AffineElement> members; // sorted
  Int length = 0;
  QVec newton;                        // dominant Newton point nu-bar

  bool contains(const AffineElement& e) const;
};

/// Decomposition z = w * y of some member of a class, with W_K finite,
/// w in W_K, y straight, y bi-K-reduced and yKy^-1 = K.
struct StandardRep {
  AffineElement w, y;
  std::vector<int> K;  // generator indices in S_aff
};

/// Standard pair (x, Gamma): J = J_{nu_x} with nu_x dominant, x straight
/// in W~_J, Gamma a finite-type subset of J_aff = S_aff(J) normalized by x.
struct StandardPair {
  std::vector<int> J;
  AffineElement x;
  std::vector<int> gamma;  // generator indices in S_aff(J) of weyl(J)
};

std::pair<AffineElement, ShiftKind> cyclicShiftStep(const Weyl& W, const AffineElement& e,
                                                    int gen);

struct ReductionResult {
  AffineElement minimal;
  std::vector<ShiftStep> path;
};

/// Walks cyclic-shift steps from e to a minimal-length element of its
/// conjugacy class; the equal-length plateau is explored breadth-first.
ReductionResult reduceToMinimal(const Weyl& W, const AffineElement& e, int budget = 200000);

CyclicShiftClass cyclicShiftClassOf(const Weyl& W, const AffineElement& minimal);

/// All classes of length <= L, ordered by (length, representative).
std::vector<CyclicShiftClass> enumerateMinClasses(const Weyl& W, int L);

struct SigmaResult {
  CyclicShiftClass cls;
  int sign = 1;  // (-1)^{l(e) - l(Sigma_e)}
};

/// Strategy knob for the Sigma recursion; all strategies must agree (the
/// class Sigma_e is unique), which the tests assert.
enum class SigmaStrategy { FirstDrop, LastDrop, ReverseScan };

SigmaResult sigmaOf(const Weyl& W, const AffineElement& e,
                    SigmaStrategy strategy = SigmaStrategy::FirstDrop);

QVec newtonPoint(const Weyl& W, const AffineElement& e);
QVec newtonPointDominant(const Weyl& W, const AffineElement& e);

/// l(e) == <nu-bar, 2 rho_vee>.
bool isStraight(const Weyl& W, const AffineElement& e);

StandardRep standardRepresentative(const Weyl& W, const CyclicShiftClass& cls);
StandardPair standardPairOf(const Weyl& W, const CyclicShiftClass& cls);
StandardPair standardPairFromRep(const Weyl& W, const StandardRep& rep);

/// Same x, and Gamma' = omega Gamma omega^-1 for some omega in Omega_J.
bool pairsEquivalent(const RootDatum& rd, const StandardPair& a, const StandardPair& b);

/// Bruhat order on W~ (equal Omega parts, Bruhat on the W_aff parts).
bool bruhatLeq(const Weyl& W, const AffineElement& a, const AffineElement& b);

/// Sigma precedes e: some member of the class is Bruhat-below e.
bool precedes(const Weyl& W, const CyclicShiftClass& cls, const AffineElement& e);

/// Brute-force oracle for Sigma_e: the unique maximal class among those
/// preceding e (searches the given table, which must cover length(e)).
SigmaResult sigmaByMaximality(const Weyl& W, const std::vector<CyclicShiftClass>& table,
                              const AffineElement& e);

/// Position of the class containing the given minimal element; -1 if absent.
int findClass(const std::vector<CyclicShiftClass>& table, const AffineElement& member);

/// Stable printable label of a class within a table: "len.index".
std::string classLabel(const std::vector<CyclicShiftClass>& table, int idx);

}  // namespace hecke0
