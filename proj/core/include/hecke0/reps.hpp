#pragma once

#include <hecke0/cocenter.hpp>
#include <hecke0/conjugacy.hpp>
#include <hecke0/hecke.hpp>
#include <hecke0/linalg.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hecke0 {

/// Lex-least Omega_J-conjugate of a generator subset of S_aff(J); the
/// canonical representative of its ~-orbit.
std::vector<int> canonicalGammaOf(const Weyl& WJ, const std::vector<int>& gamma);

struct StabGen {
  AffineElement elt;  // element of Omega_J(Gamma)
  Int order = 0;      // 0 = infinite
};

/// A pair (J, Gamma) with W_Gamma finite, together with the stabilizer
/// Omega_J(Gamma) = {tau : tau Gamma tau^-1 = Gamma} in generator form and
/// a fixed transversal of Omega_J / Omega_J(Gamma). The transversal is
/// indexed by the Omega_J-orbit of Gamma, which is finite even when
/// Omega_J is not.
class ParahoricDatum {
 public:
  ParahoricDatum(const RootDatum& rd, std::vector<int> J, std::vector<int> gamma);

  const RootDatum& datum() const { return rd_; }
  const Weyl& weylJ() const { return WJ_; }
  const std::vector<int>& J() const { return J_; }
  const std::vector<int>& gamma() const { return gamma_; }
  std::vector<int> canonicalGamma() const { return canonicalGammaOf(WJ_, gamma_); }

  /// Index [Omega_J : Omega_J(Gamma)] = size of the orbit of Gamma.
  Int index() const { return Int(orbit_.size()); }
  /// Orbit points tau Gamma tau^-1, base point first.
  const std::vector<std::vector<int>>& orbit() const { return orbit_; }
  /// Coset representatives, parallel to orbit(); cosetReps()[0] = identity.
  const std::vector<AffineElement>& cosetReps() const { return cosetReps_; }
  /// Independent generators of Omega_J(Gamma) (orders 0 = free).
  const std::vector<StabGen>& stabGens() const { return stabGens_; }

  bool stabilizes(const AffineElement& tau) const;  // tau Gamma tau^-1 == Gamma
  int cosetOf(const AffineElement& tau) const;      // orbit position of tau Gamma tau^-1
  /// Exponents of x in stabGens(); throws if x is not in Omega_J(Gamma).
  IVec stabCoords(const AffineElement& x) const;

 private:
  const RootDatum& rd_;
  const Weyl& WJ_;
  std::vector<int> J_;
  std::vector<int> gamma_;
  std::vector<std::vector<int>> orbit_;
  std::vector<AffineElement> cosetReps_;
  std::vector<StabGen> stabGens_;
  IMat stabBasis_;  // columns: stabGens in Omega-generator exponents
  IMat relCols_;    // columns: torsion relations d_i e_i of Omega_J
};

/// chi in Hom(Omega_J(Gamma), k^x) with rational values, one per stabGen.
/// Torsion generators only admit values of multiplicative order dividing
/// the generator order, which over Q means +-1 (and 1 for odd order).
struct Character {
  std::vector<Rat> values;
};

void validateCharacter(const ParahoricDatum& pd, const Character& chi);
Rat chiEval(const ParahoricDatum& pd, const Character& chi, const AffineElement& x);

/// All characters with torsion values in {1, -1} and free-generator values
/// drawn from the given test set.
std::vector<Character> characterTestSet(const ParahoricDatum& pd,
                                        const std::vector<Rat>& freeValues);

/// Extension of chi to the 1-dimensional H~_{J,0}(Gamma)-module:
/// T^J_b -> (-1)^{l_J(b)} for b in W_Gamma, 0 off W_Gamma; Omega_J(Gamma)
/// acts through chi. Defined for any b in W~_J (zero off the subalgebra).
Rat chiExtended(const ParahoricDatum& pd, const Character& chi, const AffineElement& b);

/// Finite dimensional module over the extended 0-Hecke algebra of a Weyl
/// context: one exact matrix per simple affine generator and per Omega
/// generator. Column-vector convention: T_{s1 s2} acts by sMat[s1]*sMat[s2].
struct FDModule {
  const Weyl* W = nullptr;
  int dim = 0;
  std::vector<QMat> sMat;
  std::vector<QMat> oMat;
  std::vector<QMat> oMatInv;
};

FDModule zeroModule(const Weyl& W);

/// Matrix of T_tau for tau in Omega (product over class exponents).
QMat omegaMatrix(const FDModule& m, const AffineElement& tau);
/// Matrix of T_e along the canonical reduced word.
QMat actionMatrix(const FDModule& m, const AffineElement& e);
Rat traceOf(const FDModule& m, const AffineElement& e);
/// Trace on a class; asserts equality over all members.
Rat traceOfClass(const FDModule& m, const CyclicShiftClass& cls);
/// Matrix of a zero-mode Hecke element.
QMat applyHecke(const FDModule& m, const HeckeElt& h);

/// Quadratic, braid, Omega-order/commutation and conjugation-compatibility
/// relations on the generator matrices; returns the number of violations.
int verifyRelations(const FDModule& m);

/// M = H~_{J,0} tensor over H~_{J,0}(Gamma) of chi, on the basis
/// {T_tau tensor v} indexed by the coset transversal.
FDModule buildM(const ParahoricDatum& pd, const Character& chi);

/// pi_{J,Gamma,chi}: induction of buildM to the full algebra on the basis
/// {T_d tensor m, d in W0^J}, matrices computed by the deep-shift rewrite.
/// Relations are verified; throws on any violation.
FDModule inducePi(const ParahoricDatum& pd, const Character& chi);

/// Minimal-length coset representatives of W0 / W_J, ascending W0 index.
std::vector<int> minimalCosetReps(const RootDatum& rd, const std::vector<int>& J);

/// Pullback through iota: T_s -> -T_s - 1, T_tau -> T_tau.
FDModule iotaPullback(const FDModule& m);

// --- class tables and characters -------------------------------------------

struct ClassData {
  CyclicShiftClass cls;
  StandardPair pair;
  std::vector<int> canonGamma;  // canonical form of pair.gamma under Omega_J
};

/// Classes of the full group up to length L with their standard pairs.
struct ClassTable {
  const Weyl* W = nullptr;
  int L = 0;
  std::vector<ClassData> rows;
};

ClassTable buildClassTable(const Weyl& W, int L);
ClassTable buildClassTable(const Weyl& W, const std::vector<CyclicShiftClass>& classes, int L);

/// Trace vector over the table rows (class representatives).
using CharVector = std::vector<Rat>;
CharVector charVector(const ClassTable& table, const FDModule& m);

struct CharFormulaResult {
  bool covered = true;  // false in the regime J strictly between empty and J_{nu_x}
  Rat value = 0;
};

/// Closed-form trace of T_Sigma on pi_{pd,chi} from the standard pair:
/// 0 if J is not contained in J_{nu_x} or if x moves Gamma; otherwise
/// (-1)^{l(w~)-l(x)} chi(x) #{tau : tau^-1 Gamma' tau subseteq Gamma}.
CharFormulaResult charFormula(const Weyl& W, const ClassData& row, const ParahoricDatum& pd,
                              const Character& chi);

// --- the functors M -> M_J -> M_{J,Gamma} -----------------------------------

/// M_J as an H~_{J,0}-module: the stable image of T_{t^mu}, mu in X+(J).
struct Submodule {
  FDModule mod;    // over weyl(J)
  QMat inclusion;  // dim(M) x dim(M_J), columns = basis of the stable image
};

/// A strictly J-dominant weight: zero pairing on J, positive off J.
IVec deepWeight(const RootDatum& rd, const std::vector<int>& J, Int scale);

Submodule mJFunctor(const FDModule& m, const std::vector<int>& J);

/// M_{J,Gamma} = image of T^J_{w_Gamma} on M_J with its Omega_J(Gamma)
/// action.
struct GammaModule {
  const Submodule* mj = nullptr;
  QMat inclusion;  // basis inside M_J
  int dim = 0;
};

GammaModule mJGamma(const Submodule& mj, const ParahoricDatum& pd);
/// Trace of x in Omega_J(Gamma) on M_{J,Gamma}.
Rat traceOnGamma(const GammaModule& g, const AffineElement& x);

// --- aleph, decomposition, rigidity, supersingularity -----------------------

/// Canonical key for (J, Gamma) in aleph/~.
struct AlephPair {
  std::vector<int> J;
  std::vector<int> gamma;  // canonical under Omega_J

  bool operator==(const AlephPair& o) const = default;
  bool operator<(const AlephPair& o) const {
    if (J != o.J) return J < o.J;
    return gamma < o.gamma;
  }
};

/// Strict order of the peeling recursion: J strictly smaller, or same J
/// and Gamma strictly containing a conjugate of the other Gamma.
bool alephLess(const RootDatum& rd, const AlephPair& a, const AlephPair& b);

struct PiCandidate {
  std::shared_ptr<ParahoricDatum> pd;
  Character chi;
  FDModule pi;
  CharVector chvec;
  std::string name;
};

PiCandidate makeCandidate(const RootDatum& rd, const std::vector<int>& J,
                          const std::vector<int>& gamma, const Character& chi,
                          const ClassTable& table);
/// All (J, Gamma, chi) for the datum: J over subsets of F0, Gamma over
/// finite-type subsets of S_aff(J) up to ~, chi over characterTestSet.
std::vector<PiCandidate> allCandidates(const RootDatum& rd, const ClassTable& table,
                                       const std::vector<Rat>& freeValues);

/// The candidates whose stabilizer Omega_J(Gamma) is finite: the family
/// carrying a complete set of rational characters (free generators admit
/// no canonical finite value set).
std::vector<PiCandidate> finiteCandidates(const RootDatum& rd, const ClassTable& table);

/// Label of a table row, "length.index" (index within equal lengths).
std::string rowLabel(const ClassTable& table, int idx);

struct DecomposeResult {
  bool ok = false;
  std::vector<Rat> coeff;  // per candidate
  std::string error;       // diagnostic when !ok
};

/// Peeling: locate minimal pairs of aleph(v) from nonvanishing traces,
/// solve the chi-multiplicities at each, subtract, recurse; the residual
/// must vanish identically.
DecomposeResult decompose(const ClassTable& table, const CharVector& v,
                          const std::vector<PiCandidate>& candidates);

/// Trace vanishing on all classes with J_{nu} a proper subset of F0.
bool isRigid(const ClassTable& table, const CharVector& v);

struct SSReport {
  bool traces = false;      // criterion (2): nss traces vanish
  bool eKill = false;       // criterion (1): E_w kills the module in the window
  bool eEvaluated = false;  // window nonempty
  bool span = false;        // criterion (3): decomposes over doubly finite-type Gamma
  bool spanEvaluated = false;
  bool value() const { return traces; }
};

/// Evaluates the supersingularity criteria and checks their agreement;
/// throws if evaluated criteria disagree. Criterion (1) needs the module's
/// own Gamma (for the Cor-bound window 2*max(#W_Gamma, #W_{S_aff minus
/// Gamma}) < l <= L) and is skipped when gamma is absent or the window is
/// empty.
SSReport isSupersingular(const ClassTable& table, const Cocenter& coc, const FDModule& m,
                         const std::vector<PiCandidate>& candidates,
                         const std::optional<std::vector<int>>& gamma = std::nullopt);

}  // namespace hecke0
