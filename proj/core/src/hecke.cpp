#include <hecke0/hecke.hpp>

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace hecke0 {

LaurentPoly LaurentPoly::monomial(int vExp, BigInt c) {
  LaurentPoly p;
  p.set(vExp, std::move(c));
  return p;
}

BigInt LaurentPoly::coeff(int vExp) const {
  auto it = c_.find(vExp);
  return it == c_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::set(int vExp, BigInt c) {
  if (c == 0)
    c_.erase(vExp);
  else
    c_[vExp] = std::move(c);
}

void LaurentPoly::add(int vExp, const BigInt& c) { set(vExp, coeff(vExp) + c); }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.c_) r.add(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.c_) r.add(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) r.add(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.set(e, -c);
  return r;
}

int LaurentPoly::minExp() const {
  if (c_.empty()) throw std::logic_error("minExp of zero polynomial");
  return c_.begin()->first;
}

BigInt LaurentPoly::atQZero() const {
  if (!c_.empty() && c_.begin()->first < 0)
    throw std::domain_error("pole at q = 0");
  return coeff(0);
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first && c > 0) os << "+";
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c == -1)
      os << "-";
    else if (c != 1)
      os << c << "*";
    os << "v^" << e;
  }
  return os.str();
}

HeckeElt heckeZero(HeckeMode mode) { return {mode, {}}; }

HeckeElt heckeBasis(const AffineElement& e, HeckeMode mode, LaurentPoly c) {
  HeckeElt h{mode, {}};
  if (!c.isZero()) h.terms.emplace(e, std::move(c));
  return h;
}

HeckeElt heckeAdd(const HeckeElt& a, const HeckeElt& b) {
  if (a.mode != b.mode) throw std::invalid_argument("Hecke mode mismatch");
  HeckeElt r = a;
  for (const auto& [e, c] : b.terms) {
    LaurentPoly s = (r.terms.count(e) ? r.terms[e] : LaurentPoly()) + c;
    if (s.isZero())
      r.terms.erase(e);
    else
      r.terms[e] = s;
  }
  return r;
}

HeckeElt heckeSub(const HeckeElt& a, const HeckeElt& b) {
  return heckeAdd(a, heckeScale(LaurentPoly(-1), b));
}

HeckeElt heckeScale(const LaurentPoly& c, const HeckeElt& a) {
  HeckeElt r{a.mode, {}};
  if (c.isZero()) return r;
  for (const auto& [e, x] : a.terms) {
    LaurentPoly p = c * x;
    if (!p.isZero()) r.terms.emplace(e, std::move(p));
  }
  return r;
}

namespace {

void addTerm(HeckeElt& h, const AffineElement& e, const LaurentPoly& c) {
  auto it = h.terms.find(e);
  if (it == h.terms.end()) {
    if (!c.isZero()) h.terms.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.isZero()) h.terms.erase(it);
}

// right-multiply by the generator s (a single simple reflection of the
// context), applying the quadratic relation on descents
HeckeElt mulGen(const Weyl& W, const HeckeElt& a, const AffineElement& s) {
  HeckeElt r{a.mode, {}};
  for (const auto& [x, c] : a.terms) {
    AffineElement xs = W.multiply(x, s);
    if (W.length(xs) > W.length(x)) {
      addTerm(r, xs, c);
    } else if (a.mode == HeckeMode::Zero) {
      addTerm(r, x, -c);  // T_s^2 = -T_s
    } else {
      addTerm(r, x, c * (LaurentPoly::q(1) - LaurentPoly(1)));  // (q-1) T_x
      addTerm(r, xs, c * LaurentPoly::q(1));                    // + q T_{xs}
    }
  }
  return r;
}

HeckeElt mulElement(const Weyl& W, const HeckeElt& a, const AffineElement& y) {
  AffineWord word = W.reducedWord(y);
  HeckeElt r = a;
  for (int k : word.letters) r = mulGen(W, r, W.generator(k));
  if (!(word.tau == W.identity())) {
    HeckeElt shifted{r.mode, {}};
    for (const auto& [x, c] : r.terms) shifted.terms.emplace(W.multiply(x, word.tau), c);
    r = std::move(shifted);
  }
  return r;
}

}  // namespace

HeckeElt tMultiply(const Weyl& W, const HeckeElt& a, const HeckeElt& b) {
  if (a.mode != b.mode) throw std::invalid_argument("Hecke mode mismatch");
  HeckeElt r{a.mode, {}};
  for (const auto& [y, c] : b.terms) {
    HeckeElt part = mulElement(W, heckeScale(c, a), y);
    r = heckeAdd(r, part);
  }
  return r;
}

HeckeElt tInverse(const Weyl& W, const AffineElement& e) {
  AffineWord word = W.reducedWord(e);
  // e = s_1 ... s_k tau, so T_e^-1 = T_tau^-1 T_{s_k}^-1 ... T_{s_1}^-1
  HeckeElt r = heckeBasis(W.inverse(word.tau), HeckeMode::Generic);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    const AffineElement& s = W.generator(*it);
    // T_s^-1 = q^-1 T_s + (q^-1 - 1)
    HeckeElt sInv = heckeBasis(s, HeckeMode::Generic, LaurentPoly::q(-1));
    sInv = heckeAdd(sInv, heckeBasis(W.identity(), HeckeMode::Generic,
                                     LaurentPoly::q(-1) - LaurentPoly(1)));
    r = tMultiply(W, r, sInv);
  }
  return r;
}

HeckeElt iota(const Weyl& W, const HeckeElt& a) {
  bool zero = a.mode == HeckeMode::Zero;
  HeckeElt r = heckeZero(HeckeMode::Generic);
  for (const auto& [e, c] : a.terms) {
    Int l = W.length(e);
    LaurentPoly sign = LaurentPoly::q(int(l), (l % 2 == 0) ? BigInt(1) : BigInt(-1));
    r = heckeAdd(r, heckeScale(c * sign, tInverse(W, W.inverse(e))));
  }
  return zero ? specializeZero(r) : r;
}

HeckeElt tPower(const Weyl& W, const AffineElement& e, Int n, HeckeMode mode) {
  if (n < 0) throw std::invalid_argument("negative Hecke power");
  HeckeElt r = heckeBasis(W.identity(), mode);
  HeckeElt base = heckeBasis(e, mode);
  for (Int i = 0; i < n; ++i) r = tMultiply(W, r, base);
  return r;
}

HeckeElt specializeZero(const HeckeElt& a) {
  HeckeElt r = heckeZero(HeckeMode::Zero);
  for (const auto& [e, c] : a.terms) {
    BigInt v = c.atQZero();
    if (v != 0) r.terms.emplace(e, LaurentPoly::monomial(0, v));
  }
  return r;
}

EBasisElt eBasis(const Weyl& W, const AffineElement& e) {
  const RootDatum& rd = W.datum();
  // split in w t^lambda order; the normal form stores t^lambda w
  IVec lambda = rd.w0Act(rd.w0Inverse(e.w), e.lambda);
  int w = e.w;

  // xi = sum of positive roots: <xi, alpha_i_vee> = 2 for all i
  IVec xi(rd.rank(), 0);
  for (int k = 0; k < rd.numPositive(); ++k) xi = addVec(xi, rd.roots()[k]);
  Int k0 = 0;
  for (int i = 0; i < rd.numSimple(); ++i) {
    Int p = rd.pair(lambda, rd.simpleCoroots()[i]);
    Int need = p < 0 ? (-p + 1) / 2 : 0;  // ceil(-p / 2)
    k0 = std::max(k0, need);
  }

  HeckeElt result;
  bool first = true;
  for (Int k = k0; k < k0 + 3; ++k) {
    IVec mu2 = scaleVec(k, xi);
    IVec mu1 = addVec(lambda, mu2);
    assert(rd.isDominant(toQ(mu1)) && rd.isDominant(toQ(mu2)));
    AffineElement wt1{rd.w0Act(w, mu1), w};  // w t^{mu1}
    Int vExp = W.length(W.translation(mu2)) - W.length(W.translation(mu1)) -
               Int(rd.w0Length(w)) + W.length(e);
    HeckeElt prod = tMultiply(W, heckeBasis(wt1, HeckeMode::Generic),
                              tInverse(W, W.translation(mu2)));
    prod = heckeScale(LaurentPoly::monomial(int(vExp)), prod);
    if (first) {
      result = prod;
      first = false;
    } else if (!(result == prod)) {
      throw std::logic_error("E-basis element depends on the (mu1, mu2) choice");
    }
  }
  // integrality in q: nonnegative exponents only (atQZero throws otherwise)
  for (const auto& [x, c] : result.terms)
    for (const auto& [exp, coef] : c.terms())
      if (exp < 0 || exp % 2 != 0)
        throw std::logic_error("E-basis element is not integral in q");
  return {result, specializeZero(result)};
}

HeckeElt parabolicEmbed(const Weyl& Wfull, const std::vector<int>& J, const HeckeElt& a) {
  for (const auto& [e, c] : a.terms)
    if (!Wfull.isJPositive(e, J))
      throw std::domain_error("parabolicEmbed: term is not J-positive");
  return a;  // labels coincide; only the ambient algebra changes
}

}  // namespace hecke0
