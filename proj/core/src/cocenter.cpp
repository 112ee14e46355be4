#include <hecke0/cocenter.hpp>

#include <stdexcept>

namespace hecke0 {

void CocenterElt::add(int cls, const BigInt& c) {
  auto it = coeff.find(cls);
  BigInt s = (it == coeff.end() ? BigInt(0) : it->second) + c;
  if (s == 0)
    coeff.erase(cls);
  else
    coeff[cls] = s;
}

Cocenter::Cocenter(const Weyl& W, int L)
    : W_(W), L_(L), classes_(enumerateMinClasses(W, L)) {}

int Cocenter::classIndexOfMinimal(const AffineElement& m) const {
  return findClass(classes_, m);
}

CocenterElt Cocenter::project(const HeckeElt& a) const {
  if (a.mode != HeckeMode::Zero) throw std::invalid_argument("psi is defined on the 0-mode");
  CocenterElt out;
  for (const auto& [e, c] : a.terms) {
    SigmaResult sr = sigmaOf(W_, e);
    int idx = findClass(classes_, sr.cls.rep);
    if (idx < 0) throw std::out_of_range("Sigma class beyond the materialized length bound");
    out.add(idx, sr.sign * c.atQZero());
  }
  return out;
}

int Cocenter::commutatorCheck(int L) const {
  if (L + 1 > L_)
    throw std::out_of_range("commutatorCheck needs classes up to L+1; enlarge the table");
  int violations = 0;
  auto commute = [&](const HeckeElt& a, const HeckeElt& b) {
    return project(heckeSub(tMultiply(W_, a, b), tMultiply(W_, b, a))).isZero();
  };
  for (const auto& e : W_.ball(L)) {
    HeckeElt te = heckeBasis(e, HeckeMode::Zero);
    for (int k = 0; k < W_.numGenerators(); ++k)
      if (!commute(te, heckeBasis(W_.generator(k), HeckeMode::Zero))) ++violations;
    for (const auto& g : W_.omegaGens())
      if (!commute(te, heckeBasis(g.lift, HeckeMode::Zero))) ++violations;
  }
  return violations;
}

bool Cocenter::nssIndicator(int cls) const {
  return W_.datum().jOfVector(classes_[cls].newton) != W_.datum().fullJ();
}

std::vector<CocenterElt> Cocenter::nssBasisUpTo() const {
  std::vector<CocenterElt> out;
  for (size_t i = 0; i < classes_.size(); ++i) {
    if (!nssIndicator(int(i))) continue;
    HeckeElt tm = heckeBasis(classes_[i].rep, HeckeMode::Zero);
    out.push_back(project(tm));
    out.push_back(project(iota(W_, tm)));
  }
  return out;
}

}  // namespace hecke0
