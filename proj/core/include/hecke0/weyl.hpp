#pragma once

#include <hecke0/root_datum.hpp>

#include <optional>
#include <vector>

namespace hecke0 {

/// Element t^lambda * w of W~ = X x| W0 in normal form. w indexes into the
/// W0 table of the owning RootDatum; elements only make sense relative to
/// one datum.
struct AffineElement {
  IVec lambda;
  int w = 0;

  bool operator==(const AffineElement& o) const { return w == o.w && lambda == o.lambda; }
  bool operator!=(const AffineElement& o) const { return !(*this == o); }
  bool operator<(const AffineElement& o) const {
    if (lambda != o.lambda) return lambda < o.lambda;
    return w < o.w;
  }
};

/// A reduced expression e = s_1 ... s_k * tau with the s_i in S_aff (by
/// generator index) and tau in Omega.
struct AffineWord {
  std::vector<int> letters;
  AffineElement tau;
};

struct OmegaGen {
  AffineElement lift;  // length-0 realization
  Int order = 0;       // 0 = infinite order
  IVec rep;            // the X-coset representative the lift was built from
};

/// Context for the (extended) affine Weyl group W~_J = X x| W_J attached to
/// a root datum and a subset J of the simple roots. J = F0 gives W~ itself;
/// smaller J gives the semistandard Levi with its own length function l_J,
/// affine simple reflections and Omega_J. Obtained via RootDatum::weyl(J).
class Weyl {
 public:
  Weyl(const RootDatum& rd, std::vector<int> J);

  const RootDatum& datum() const { return rd_; }
  const std::vector<int>& J() const { return J_; }
  /// Positive-root indices of R_J+.
  const std::vector<int>& positiveRootsJ() const { return posJ_; }
  /// Is the root with index i in R_J (either sign)?
  bool rootInJ(int rootIdx) const;

  // --- group arithmetic (independent of J) --------------------------------
  AffineElement identity() const { return {IVec(rd_.rank(), 0), 0}; }
  AffineElement translation(const IVec& lambda) const { return {lambda, 0}; }
  AffineElement fromFinite(int w) const { return {IVec(rd_.rank(), 0), w}; }
  AffineElement multiply(const AffineElement& a, const AffineElement& b) const;
  AffineElement inverse(const AffineElement& a) const;
  AffineElement power(const AffineElement& a, Int n) const;
  AffineElement conjugate(const AffineElement& g, const AffineElement& x) const;  // g x g^-1
  bool inGroup(const AffineElement& e) const;  // finite part in W_J

  // --- lengths ------------------------------------------------------------
  /// Closed length formula over R_J+. Requires inGroup(e).
  Int length(const AffineElement& e) const;
  /// Independent oracle: counts affine hyperplanes of R_J separating the
  /// base alcove (via a rational interior point) from its image under e.
  Int lengthHyperplanes(const AffineElement& e) const;

  // --- S_aff, words, support ----------------------------------------------
  int numGenerators() const { return int(saff_.size()); }
  const AffineElement& generator(int k) const { return saff_[k]; }
  /// Simple-root index for a finite generator, -1 for an affine one.
  int finiteIndexOf(int k) const { return genFinite_[k]; }
  /// Irreducible component (of J) a generator belongs to.
  int generatorComponent(int k) const { return genComponent_[k]; }
  int numComponents() const { return int(jComponents_.size()); }
  int generatorIndexOf(const AffineElement& s) const;  // -1 if not in S_aff
  /// Left-greedy reduced word by the fixed generator order; round-trips.
  AffineWord reducedWord(const AffineElement& e) const;
  AffineElement evalWord(const AffineWord& word) const;
  /// supp(e): tau-stable closure of the letters, as sorted generator indices.
  std::vector<int> support(const AffineElement& e) const;

  // --- Omega_J --------------------------------------------------------------
  const std::vector<OmegaGen>& omegaGens() const { return omegaGens_; }
  bool omegaFinite() const { return omegaFinite_; }
  /// All elements of Omega_J; throws if infinite.
  const std::vector<AffineElement>& omegaElements() const;
  /// Class of e's translation part in X/ZR_J, as residues per generator
  /// (free coordinates unreduced).
  IVec omegaClassOf(const AffineElement& e) const;
  AffineElement omegaLiftOf(const IVec& cls) const;
  /// Permutation of the generators induced by s -> tau s tau^-1.
  std::vector<int> conjugationOnGenerators(const AffineElement& tau) const;

  // --- cosets and positivity (full context, Jsub a subset of J) ------------
  struct Coset {
    int d;            // W0 index, minimal representative in W0^Jsub
    AffineElement u;  // element of W~_Jsub; e = d * u
  };
  Coset cosetDecompose(const AffineElement& e, const std::vector<int>& Jsub) const;
  bool isJPositive(const AffineElement& e, const std::vector<int>& Jsub) const;

  // --- Demazure monoid ------------------------------------------------------
  AffineElement demazureProduct(const AffineElement& a, const AffineElement& b) const;

  // --- enumeration ----------------------------------------------------------
  /// All elements with l_J <= L, grouped by length. Requires finite Omega_J.
  std::vector<std::vector<AffineElement>> ballByLength(int L) const;
  std::vector<AffineElement> ball(int L) const;
  /// Subgroup generated by the given generator indices, if it has at most
  /// `cap` elements; nullopt means the cap was hit (infinite or too big).
  std::optional<std::vector<AffineElement>> subgroupElements(const std::vector<int>& K,
                                                             int cap = 4096) const;
  bool finiteType(const std::vector<int>& K, int cap = 4096) const;
  /// Longest element of the finite group W_K; throws if K is not finite type.
  AffineElement longestOf(const std::vector<int>& K) const;

 private:
  Int lengthOfW(int w) const;  // l_J on W_J

  const RootDatum& rd_;
  std::vector<int> J_;
  std::vector<int> posJ_;            // root indices of R_J+
  std::vector<bool> inWJ_;           // membership of each W0 index in W_J
  std::vector<std::vector<int>> jComponents_;
  std::vector<AffineElement> saff_;
  std::vector<int> genFinite_;
  std::vector<int> genComponent_;
  QVec interior_;                    // rational interior point of the base alcove

  std::vector<OmegaGen> omegaGens_;
  bool omegaFinite_ = false;
  IMat omegaCoordMap_;               // U of the Smith form: class coords of lambda
  std::vector<Int> omegaDiag_;       // elementary divisors (one per row of U)
  std::vector<AffineElement> omegaElements_;
  std::map<IVec, int> omegaIndex_;   // residues -> position in omegaElements_
};

}  // namespace hecke0
