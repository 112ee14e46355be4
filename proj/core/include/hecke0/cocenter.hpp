#pragma once

#include <hecke0/conjugacy.hpp>
#include <hecke0/hecke.hpp>

#include <map>

namespace hecke0 {

/// Element of the cocenter, a finite integer vector over cyclic-shift
/// class indices (relative to a Cocenter's class table).
struct CocenterElt {
  std::map<int, BigInt> coeff;

  bool isZero() const { return coeff.empty(); }
  bool operator==(const CocenterElt& o) const { return coeff == o.coeff; }
  void add(int cls, const BigInt& c);
};

/// Cocenter of the 0-Hecke algebra, materialized for classes of length
/// <= L: the projection psi(T_w) = (-1)^{l(w) - l(Sigma_w)} [Sigma_w] and
/// the rigid / non-supersingular pieces.
class Cocenter {
 public:
  Cocenter(const Weyl& W, int L);

  const Weyl& weyl() const { return W_; }
  int maxLength() const { return L_; }
  const std::vector<CyclicShiftClass>& classes() const { return classes_; }
  std::string label(int cls) const { return classLabel(classes_, cls); }
  int classIndexOfMinimal(const AffineElement& m) const;

  /// psi, applied termwise to a zero-mode element. All term lengths must
  /// be <= L.
  CocenterElt project(const HeckeElt& a) const;

  /// psi([T_w, T_s]) and psi([T_w, T_tau]) vanish for all l(w) <= L,
  /// s in S_aff, tau an Omega generator. Returns the number of violations
  /// (expected 0).
  int commutatorCheck(int L) const;

  /// Non-rigid iff J_{nubar_Sigma} != F0.
  bool nssIndicator(int cls) const;

  /// Spanning vectors of the non-supersingular part at this length bound:
  /// psi(T_m) and psi(iota(T_m)) over minimal m in non-rigid classes.
  std::vector<CocenterElt> nssBasisUpTo() const;

 private:
  const Weyl& W_;
  int L_;
  std::vector<CyclicShiftClass> classes_;
};

}  // namespace hecke0
