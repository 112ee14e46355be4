#pragma once

#include <hecke0/linalg.hpp>
#include <hecke0/numeric.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke0 {

class Weyl;

struct DatumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One element of the finite Weyl group W0, stored in the group table of
/// its RootDatum. The word is the shortlex-minimal reduced expression over
/// the fixed simple-root ordering.
struct FiniteWeylElement {
  std::vector<int> word;       // simple-root indices
  IMat action;                 // action on X, column vectors: v -> action*v
  int inverse = 0;             // index of the inverse element
  std::vector<int> rightMul;   // index of (this * s_j) per simple j
  std::vector<int> leftMul;    // index of (s_j * this)
};

/// Based root datum (X, R, Y, R_vee, F0) with the derived root system,
/// the enumerated finite Weyl group and per-J Levi data. Immutable after
/// construction apart from an internal cache of Weyl contexts.
class RootDatum {
 public:
  /// Builds and validates a root datum. Throws DatumError on: a pairing
  /// that is not perfect, <alpha_i, alpha_i_vee> != 2, or a Cartan matrix
  /// that is not of finite type.
  static std::shared_ptr<const RootDatum> build(std::string name, int rank, IMat pairing,
                                                std::vector<IVec> simpleRoots,
                                                std::vector<IVec> simpleCoroots);

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  int numSimple() const { return int(simpleRoots_.size()); }

  Int pair(const IVec& x, const IVec& y) const;
  Rat pair(const QVec& x, const IVec& y) const;

  const std::vector<IVec>& simpleRoots() const { return simpleRoots_; }
  const std::vector<IVec>& simpleCoroots() const { return simpleCoroots_; }

  /// All roots; indices [0, numPositive) are the positive roots and
  /// root(i + numPositive) == -root(i).
  const std::vector<IVec>& roots() const { return roots_; }
  const std::vector<IVec>& coroots() const { return coroots_; }
  int numPositive() const { return numPos_; }
  /// Coefficients of root(i) over the simple roots.
  const std::vector<IVec>& rootCoords() const { return rootCoords_; }
  /// Coefficients of coroot(i) over the simple coroots.
  const std::vector<IVec>& corootCoords() const { return corootCoords_; }
  int rootIndex(const IVec& r) const;  // -1 if not a root

  /// Partition of the simple-root indices into irreducible components.
  const std::vector<std::vector<int>>& components() const { return components_; }
  /// Index (into roots()) of the highest root of each component.
  const std::vector<int>& highestRoots() const { return highestRoots_; }

  /// rho_vee = half sum of positive coroots, and 2*rho_vee as an integer
  /// vector in Y.
  const QVec& halfSumPosCoroots() const { return rhoVee_; }
  const IVec& twoRhoVee() const { return twoRhoVee_; }

  // --- finite Weyl group ------------------------------------------------
  int order() const { return int(w0_.size()); }
  const FiniteWeylElement& w0(int i) const { return w0_[i]; }
  int w0Multiply(int a, int b) const;                 // index of a*b
  int w0Inverse(int a) const { return w0_[a].inverse; }
  int w0Length(int a) const { return int(w0_[a].word.size()); }
  IVec w0Act(int a, const IVec& v) const;             // w(v) on X
  QVec w0Act(int a, const QVec& v) const;
  IVec w0ActY(int a, const IVec& y) const;            // w(y) on Y
  int w0FromMatrix(const IMat& m) const;              // -1 if absent
  int longestElement() const { return longest_; }
  /// Index of the reflection s_beta for a root index beta.
  int reflection(int rootIdx) const { return reflections_[rootIdx]; }
  /// True if w(root) is a negative root.
  bool sendsToNegative(int w, int rootIdx) const;

  // --- J-dependent (Levi) queries ----------------------------------------
  /// J_v = {i in F0 : <v, alpha_i_vee> = 0}.
  std::vector<int> jOfVector(const QVec& v) const;
  bool isDominant(const QVec& v) const;
  /// Unique dominant representative vbar of the W0-orbit of v, with the
  /// minimal-length z such that z(v) = vbar (z in {}^{J_vbar} W0).
  std::pair<QVec, int> dominantRep(const QVec& v) const;
  /// lambda in X^+ with J_lambda == J?
  bool xPlusJMembership(const IVec& lambda, const std::vector<int>& J) const;

  /// Weyl context for W~_J = X x| W_J; J given as sorted simple indices.
  /// J = all simple indices gives the full extended affine Weyl group.
  const Weyl& weyl(const std::vector<int>& J) const;
  const Weyl& weylFull() const;
  std::vector<int> fullJ() const;

  ~RootDatum();

 private:
  RootDatum() = default;
  void derive();  // fills roots, W0, components, rho

  std::string name_;
  int rank_ = 0;
  IMat pairing_;
  std::vector<IVec> simpleRoots_;
  std::vector<IVec> simpleCoroots_;

  std::vector<IVec> roots_, coroots_;
  std::vector<IVec> rootCoords_, corootCoords_;
  std::map<IVec, int> rootIdx_;
  int numPos_ = 0;
  std::vector<std::vector<int>> components_;
  std::vector<int> highestRoots_;
  QVec rhoVee_;
  IVec twoRhoVee_;

  std::vector<FiniteWeylElement> w0_;
  std::map<IMat, int> w0ByMatrix_;
  std::vector<int> reflections_;
  int longest_ = 0;

  mutable std::mutex cacheMu_;
  mutable std::map<std::vector<int>, std::unique_ptr<Weyl>> weylCache_;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

}  // namespace hecke0
