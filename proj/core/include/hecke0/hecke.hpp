#pragma once

#include <hecke0/weyl.hpp>

#include <map>
#include <string>

namespace hecke0 {

/// Sparse Laurent polynomial in v, with q = v^2. Exact integer
/// coefficients, normalized (no zero entries).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Int c) { set(0, BigInt(c)); }  // NOLINT: implicit constant
  static LaurentPoly monomial(int vExp, BigInt c = 1);
  static LaurentPoly q(int qExp, BigInt c = 1) { return monomial(2 * qExp, std::move(c)); }

  const std::map<int, BigInt>& terms() const { return c_; }
  bool isZero() const { return c_.empty(); }
  BigInt coeff(int vExp) const;
  void set(int vExp, BigInt c);
  void add(int vExp, const BigInt& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  int minExp() const;  // throws on zero
  /// Value at q = 0 (so v = 0): the constant term; throws if any negative
  /// exponent survives.
  BigInt atQZero() const;

  std::string str() const;  // deterministic "v^k" rendering

 private:
  std::map<int, BigInt> c_;
};

enum class HeckeMode { Generic, Zero };

/// Element of the (extended) Hecke algebra of a Weyl context, expressed in
/// the T-basis with Laurent coefficients. In Zero mode all coefficients are
/// constants and the quadratic relation is T_s^2 = -T_s.
struct HeckeElt {
  HeckeMode mode = HeckeMode::Zero;
  std::map<AffineElement, LaurentPoly> terms;

  bool isZero() const { return terms.empty(); }
  bool operator==(const HeckeElt& o) const { return mode == o.mode && terms == o.terms; }
};

HeckeElt heckeZero(HeckeMode mode);
HeckeElt heckeBasis(const AffineElement& e, HeckeMode mode, LaurentPoly c = LaurentPoly(1));
HeckeElt heckeAdd(const HeckeElt& a, const HeckeElt& b);
HeckeElt heckeSub(const HeckeElt& a, const HeckeElt& b);
HeckeElt heckeScale(const LaurentPoly& c, const HeckeElt& a);

/// T-basis product, expanding the right factor along its canonical reduced
/// word. Elements must live in the context's group (l_J lengths are used,
/// so this is also the Levi algebra product for J-contexts).
HeckeElt tMultiply(const Weyl& W, const HeckeElt& a, const HeckeElt& b);

/// T_e^{-1} in generic mode, via T_s^{-1} = q^{-1} T_s + (q^{-1} - 1).
HeckeElt tInverse(const Weyl& W, const AffineElement& e);

/// iota(T_w) = (-q)^{l(w)} T_{w^-1}^{-1}, extended linearly. Zero-mode
/// input is lifted to generic, transformed, and specialized back.
HeckeElt iota(const Weyl& W, const HeckeElt& a);

HeckeElt tPower(const Weyl& W, const AffineElement& e, Int n, HeckeMode mode);

/// q = 0 specialization; throws if a coefficient has a pole at q = 0.
HeckeElt specializeZero(const HeckeElt& a);

struct EBasisElt {
  HeckeElt generic;  // integral in q by construction (asserted)
  HeckeElt zero;
};

/// E_{w t^lambda} = q^{(l(t^mu2) - l(t^mu1) - l(w) + l(e))/2}
///                  T_{w t^mu1} T_{t^mu2}^{-1},
/// mu_i dominant with mu1 - mu2 = lambda. Choice-independence over three
/// (mu1, mu2) pairs is asserted, then q-integrality, then q = 0.
EBasisElt eBasis(const Weyl& W, const AffineElement& e);

/// Embedding of the J-positive part of the Levi algebra: T^J_e -> T_e.
/// Throws if any term is not J-positive.
HeckeElt parabolicEmbed(const Weyl& Wfull, const std::vector<int>& J, const HeckeElt& a);

}  // namespace hecke0
