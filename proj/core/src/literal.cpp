#include <hecke0/literal.hpp>

#include <sstream>
#include <stdexcept>

namespace hecke0 {

namespace {

std::vector<std::string> splitOn(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Int parseInt(const std::string& s) {
  size_t used = 0;
  long long v = std::stoll(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

AffineElement parseFactor(const Weyl& W, const std::string& tok) {
  const RootDatum& rd = W.datum();
  if (tok == "e") return W.identity();
  if (tok.size() >= 3 && tok.compare(0, 2, "t[") == 0 && tok.back() == ']') {
    auto parts = splitOn(tok.substr(2, tok.size() - 3), ',');
    if (int(parts.size()) != rd.rank()) throw std::invalid_argument("t[...] arity mismatch");
    IVec lambda;
    for (const auto& p : parts) lambda.push_back(parseInt(p));
    return W.translation(lambda);
  }
  if (tok.size() >= 2 && (tok[0] == 's' || tok[0] == 'a' || tok[0] == 'o')) {
    Int k = parseInt(tok.substr(1));
    if (tok[0] == 's') {
      if (k < 1 || k > rd.numSimple()) throw std::invalid_argument("no simple reflection " + tok);
      for (int g = 0; g < W.numGenerators(); ++g)
        if (W.finiteIndexOf(g) == int(k - 1)) return W.generator(g);
      throw std::invalid_argument("simple reflection outside this context: " + tok);
    }
    if (tok[0] == 'a') {
      if (k < 1 || k > W.numComponents()) throw std::invalid_argument("no affine component " + tok);
      for (int g = 0; g < W.numGenerators(); ++g)
        if (W.finiteIndexOf(g) < 0 && W.generatorComponent(g) == int(k - 1)) return W.generator(g);
      throw std::invalid_argument("no affine generator in component " + tok.substr(1));
    }
    if (k < 1 || k > Int(W.omegaGens().size()))
      throw std::invalid_argument("no Omega generator " + tok);
    return W.omegaGens()[k - 1].lift;
  }
  throw std::invalid_argument("bad factor '" + tok + "'");
}

}  // namespace

AffineElement parseElement(const Weyl& W, const std::string& text) {
  AffineElement e = W.identity();
  for (const auto& tok : splitOn(text, '*')) {
    if (tok.empty()) throw std::invalid_argument("empty factor");
    e = W.multiply(e, parseFactor(W, tok));
  }
  return e;
}

std::string printElement(const Weyl& W, const AffineElement& e) {
  const RootDatum& rd = W.datum();
  bool lambdaZero = isZeroVec(e.lambda);
  if (lambdaZero && e.w == 0) return "e";
  std::ostringstream os;
  if (!lambdaZero) {
    os << "t[";
    for (size_t i = 0; i < e.lambda.size(); ++i) os << (i ? "," : "") << e.lambda[i];
    os << ']';
  }
  for (int j : rd.w0(e.w).word) {
    if (os.tellp() > 0) os << '*';
    os << 's' << (j + 1);
  }
  return os.str();
}

}  // namespace hecke0
