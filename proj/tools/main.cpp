// hecke0: command line front end for the affine 0-Hecke toolkit.
//
// Subcommands: classes, hecke {mul,pow,iota,ebasis}, cocenter
// {project,check}, module {build,chartable,decompose,sstest}, verify,
// tracetable. All output is deterministic for a fixed invocation; numbers
// are exact (rationals as "p/q").

#include <CLI11.hpp>
#include <json.hpp>

#include <hecke0/catalog.hpp>
#include <hecke0/cocenter.hpp>
#include <hecke0/literal.hpp>
#include <hecke0/reps.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace hecke0;

namespace {

struct RunConfig {
  std::string datum = "A1-sc";
  int maxLen = 6;
  std::string format = "tsv";
  std::string mode = "zero";
  std::string out;
};

std::string ratStr(const Rat& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

std::string intsStr(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

std::string qvecStr(const QVec& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << ratStr(v[i]);
  os << ')';
  return os.str();
}

DatumPtr resolveDatum(const std::string& name) {
  for (const auto& n : catalogNames())
    if (n == name) return catalogDatum(name);
  std::ifstream in(name);
  if (!in) throw DatumError("unknown datum and unreadable path: " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return datumFromJson(ss.str());
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + cfg.out);
  f << text;
}

HeckeMode parseMode(const std::string& m) {
  if (m == "zero") return HeckeMode::Zero;
  if (m == "generic") return HeckeMode::Generic;
  throw CLI::ValidationError("--mode must be zero or generic");
}

std::vector<int> parseIndexList(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  std::sort(out.begin(), out.end());
  return out;
}

Rat parseRat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  return Rat(BigInt(s.substr(0, slash))) / Rat(BigInt(s.substr(slash + 1)));
}

json termsJson(const Weyl& W, const HeckeElt& h) {
  json arr = json::array();
  for (const auto& [e, c] : h.terms)
    arr.push_back({{"element", printElement(W, e)}, {"coefficient", c.str()}});
  return arr;
}

std::string termsTsv(const Weyl& W, const HeckeElt& h) {
  std::ostringstream os;
  os << "element\tcoefficient\n";
  for (const auto& [e, c] : h.terms) os << printElement(W, e) << '\t' << c.str() << '\n';
  return os.str();
}

std::string pairStr(const Weyl& W, const StandardPair& p) {
  return "J=" + intsStr(p.J) + " x=" + printElement(W, p.x) + " G=" + intsStr(p.gamma);
}

// --- classes -----------------------------------------------------------------

int cmdClasses(const RunConfig& cfg) {
  DatumPtr rd = resolveDatum(cfg.datum);
  const Weyl& W = rd->weylFull();
  ClassTable t = buildClassTable(W, cfg.maxLen);
  if (cfg.format == "dot") {
    std::ostringstream os;
    os << "digraph classes {\n";
    for (size_t i = 0; i < t.rows.size(); ++i) {
      const auto& cls = t.rows[i].cls;
      os << "  subgraph \"cluster_" << rowLabel(t, int(i)) << "\" {\n";
      os << "    label=\"" << rowLabel(t, int(i)) << "\";\n";
      for (const auto& m : cls.members) os << "    \"" << printElement(W, m) << "\";\n";
      for (const auto& m : cls.members) {
        for (int s = 0; s < W.numGenerators(); ++s) {
          auto [to, kind] = cyclicShiftStep(W, m, s);
          if (kind == ShiftKind::Preserved && cls.contains(to) && m < to)
            os << "    \"" << printElement(W, m) << "\" -> \"" << printElement(W, to)
               << "\" [label=\"s" << s << "\", dir=both];\n";
        }
      }
      os << "  }\n";
    }
    os << "}\n";
    emit(cfg, os.str());
    return 0;
  }
  if (cfg.format == "json") {
    json arr = json::array();
    for (size_t i = 0; i < t.rows.size(); ++i) {
      const auto& r = t.rows[i];
      arr.push_back({{"label", rowLabel(t, int(i))},
                     {"length", int(r.cls.length)},
                     {"size", r.cls.members.size()},
                     {"representative", printElement(W, r.cls.rep)},
                     {"newton", qvecStr(r.cls.newton)},
                     {"straight", isStraight(W, r.cls.rep)},
                     {"pair", {{"J", r.pair.J},
                               {"x", printElement(W, r.pair.x)},
                               {"gamma", r.pair.gamma},
                               {"gammaCanonical", r.canonGamma}}}});
    }
    emit(cfg, arr.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "label\tlength\tsize\trepresentative\tnewton\tstraight\tpair\n";
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    os << rowLabel(t, int(i)) << '\t' << r.cls.length << '\t' << r.cls.members.size() << '\t'
       << printElement(W, r.cls.rep) << '\t' << qvecStr(r.cls.newton) << '\t'
       << (isStraight(W, r.cls.rep) ? 1 : 0) << '\t' << pairStr(W, r.pair) << '\n';
  }
  emit(cfg, os.str());
  return 0;
}

// --- hecke ---------------------------------------------------------------------

int cmdHecke(const RunConfig& cfg, const std::string& op, const std::string& aStr,
             const std::string& bStr, Int n) {
  DatumPtr rd = resolveDatum(cfg.datum);
  const Weyl& W = rd->weylFull();
  HeckeMode mode = parseMode(cfg.mode);
  json out;
  HeckeElt res;
  if (op == "mul") {
    res = tMultiply(W, heckeBasis(parseElement(W, aStr), mode),
                    heckeBasis(parseElement(W, bStr), mode));
  } else if (op == "pow") {
    res = tPower(W, parseElement(W, aStr), n, mode);
  } else if (op == "iota") {
    res = iota(W, heckeBasis(parseElement(W, aStr), mode));
  } else {  // ebasis
    EBasisElt e = eBasis(W, parseElement(W, aStr));
    if (cfg.format == "json") {
      out = {{"generic", termsJson(W, e.generic)}, {"zero", termsJson(W, e.zero)}};
      emit(cfg, out.dump(2) + "\n");
    } else {
      emit(cfg, "== generic\n" + termsTsv(W, e.generic) + "== zero\n" + termsTsv(W, e.zero));
    }
    return 0;
  }
  if (cfg.format == "json")
    emit(cfg, termsJson(W, res).dump(2) + "\n");
  else
    emit(cfg, termsTsv(W, res));
  return 0;
}

// --- cocenter -------------------------------------------------------------------

int cmdCocenter(const RunConfig& cfg, const std::string& op, const std::string& eltStr) {
  DatumPtr rd = resolveDatum(cfg.datum);
  const Weyl& W = rd->weylFull();
  Cocenter coc(W, cfg.maxLen + (op == "check" ? 1 : 0));
  if (op == "check") {
    int bad = coc.commutatorCheck(cfg.maxLen);
    std::ostringstream os;
    os << "commutator violations\t" << bad << '\n';
    emit(cfg, os.str());
    return bad == 0 ? 0 : 1;
  }
  AffineElement e = parseElement(W, eltStr);
  CocenterElt p = coc.project(heckeBasis(e, HeckeMode::Zero));
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& [cls, c] : p.coeff)
      arr.push_back({{"class", coc.label(cls)}, {"coefficient", c.str()}});
    emit(cfg, arr.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "class\tcoefficient\n";
    for (const auto& [cls, c] : p.coeff) os << coc.label(cls) << '\t' << c.str() << '\n';
    emit(cfg, os.str());
  }
  return 0;
}

// --- module ----------------------------------------------------------------------

json matrixJson(const QMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(ratStr(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

int cmdModuleBuild(const RunConfig& cfg, const std::string& jStr, const std::string& gStr,
                   const std::string& chiStr) {
  DatumPtr rd = resolveDatum(cfg.datum);
  ParahoricDatum pd(*rd, parseIndexList(jStr), parseIndexList(gStr));
  Character chi;
  if (!chiStr.empty()) {
    std::stringstream ss(chiStr);
    std::string tok;
    while (std::getline(ss, tok, ',')) chi.values.push_back(parseRat(tok));
  } else {
    chi.values.assign(pd.stabGens().size(), Rat(1));
  }
  validateCharacter(pd, chi);
  FDModule pi = inducePi(pd, chi);
  if (cfg.format == "json") {
    json gens = json::array();
    for (size_t s = 0; s < pi.sMat.size(); ++s)
      gens.push_back({{"generator", "s" + std::to_string(s)}, {"matrix", matrixJson(pi.sMat[s])}});
    for (size_t o = 0; o < pi.oMat.size(); ++o)
      gens.push_back({{"generator", "o" + std::to_string(o)}, {"matrix", matrixJson(pi.oMat[o])}});
    json out = {{"datum", rd->name()},
                {"J", pd.J()},
                {"Gamma", pd.gamma()},
                {"index", int(pd.index())},
                {"dim", pi.dim},
                {"relationsOk", true},
                {"action", gens}};
    emit(cfg, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "datum\t" << rd->name() << "\nJ\t" << intsStr(pd.J()) << "\nGamma\t"
       << intsStr(pd.gamma()) << "\nindex\t" << pd.index() << "\ndim\t" << pi.dim
       << "\nrelationsOk\t1\n";
    emit(cfg, os.str());
  }
  return 0;
}

int cmdModuleChartable(const RunConfig& cfg, bool transpose) {
  DatumPtr rd = resolveDatum(cfg.datum);
  const Weyl& W = rd->weylFull();
  ClassTable t = buildClassTable(W, cfg.maxLen);
  auto cands = finiteCandidates(*rd, t);
  if (cfg.format == "json") {
    json out;
    out["datum"] = rd->name();
    out["maxLen"] = cfg.maxLen;
    json cols = json::array();
    for (size_t j = 0; j < t.rows.size(); ++j) cols.push_back(rowLabel(t, int(j)));
    out["classes"] = cols;
    json rows = json::array();
    for (const auto& c : cands) {
      json vals = json::array();
      for (const auto& v : c.chvec) vals.push_back(ratStr(v));
      rows.push_back({{"module", c.name}, {"traces", vals}});
    }
    out["rows"] = rows;
    emit(cfg, out.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  if (transpose) {  // tracetable orientation: one row per module
    os << "module";
    for (size_t j = 0; j < t.rows.size(); ++j) os << '\t' << rowLabel(t, int(j));
    os << '\n';
    for (const auto& c : cands) {
      os << c.name;
      for (const auto& v : c.chvec) os << '\t' << ratStr(v);
      os << '\n';
    }
  } else {  // chartable orientation: keyed by class label
    os << "class";
    for (const auto& c : cands) os << '\t' << c.name;
    os << '\n';
    for (size_t j = 0; j < t.rows.size(); ++j) {
      os << rowLabel(t, int(j));
      for (const auto& c : cands) os << '\t' << ratStr(c.chvec[j]);
      os << '\n';
    }
  }
  emit(cfg, os.str());
  return 0;
}

int cmdModuleDecompose(const RunConfig& cfg, const std::string& input) {
  std::ifstream in(input);
  if (!in) throw std::runtime_error("cannot read " + input);
  json spec = json::parse(in);
  RunConfig c2 = cfg;
  if (spec.contains("datum")) c2.datum = spec["datum"].get<std::string>();
  if (spec.contains("maxLen")) c2.maxLen = spec["maxLen"].get<int>();
  DatumPtr rd = resolveDatum(c2.datum);
  const Weyl& W = rd->weylFull();
  ClassTable t = buildClassTable(W, c2.maxLen);
  auto cands = finiteCandidates(*rd, t);
  CharVector v;
  for (const auto& x : spec["traces"]) v.push_back(parseRat(x.get<std::string>()));
  if (v.size() != t.rows.size())
    throw std::runtime_error("trace vector length does not match the class table");
  DecomposeResult res = decompose(t, v, cands);
  json out = {{"ok", res.ok}};
  if (res.ok) {
    json arr = json::array();
    for (size_t i = 0; i < cands.size(); ++i)
      if (res.coeff[i] != 0) arr.push_back({{"module", cands[i].name},
                                            {"coefficient", ratStr(res.coeff[i])}});
    out["decomposition"] = arr;
  } else {
    out["error"] = res.error;
  }
  emit(cfg, out.dump(2) + "\n");
  return res.ok ? 0 : 1;
}

int cmdModuleSstest(const RunConfig& cfg) {
  DatumPtr rd = resolveDatum(cfg.datum);
  const Weyl& W = rd->weylFull();
  ClassTable t = buildClassTable(W, cfg.maxLen);
  Cocenter coc(W, cfg.maxLen);
  auto cands = finiteCandidates(*rd, t);
  std::ostringstream os;
  os << "module\tdim\trigid\tss\tnssTraces\teKill\tspan\n";
  int rc = 0;
  for (const auto& c : cands) {
    bool rig = isRigid(t, c.chvec);
    SSReport ss;
    try {
      ss = isSupersingular(t, coc, c.pi, cands, c.pd->gamma());
    } catch (const std::exception& ex) {
      os << c.name << "\tCRITERIA DISAGREE: " << ex.what() << '\n';
      rc = 1;
      continue;
    }
    os << c.name << '\t' << c.pi.dim << '\t' << rig << '\t' << ss.value() << '\t' << ss.traces
       << '\t' << (ss.eEvaluated ? (ss.eKill ? "1" : "0") : "-") << '\t'
       << (ss.spanEvaluated ? (ss.span ? "1" : "0") : "-") << '\n';
  }
  emit(cfg, os.str());
  return rc;
}

// --- verify -----------------------------------------------------------------------

int cmdVerify(const RunConfig& cfg) {
  DatumPtr rd = resolveDatum(cfg.datum);
  const Weyl& W = rd->weylFull();
  std::ostringstream os;
  bool allOk = true;
  auto phase = [&](const std::string& name, bool ok) {
    os << name << '\t' << (ok ? "pass" : "FAIL") << '\n';
    allOk = allOk && ok;
  };

  {  // length oracle agreement
    bool ok = true;
    for (const auto& level : W.ballByLength(std::min(cfg.maxLen, 6))) {
      for (const auto& e : level) {
        Int l = W.length(e);
        if (l != W.lengthHyperplanes(e)) ok = false;
        if (l != Int(W.reducedWord(e).letters.size())) ok = false;
      }
    }
    phase("length-oracles", ok);
  }

  {
    Cocenter big(W, cfg.maxLen + 1);
    phase("cocenter-commutators", big.commutatorCheck(cfg.maxLen) == 0);
  }
  Cocenter coc(W, cfg.maxLen);
  ClassTable t = buildClassTable(W, cfg.maxLen);

  {  // Lemma wK window: T_{wy}^n = (-1)^{n l(w) - l(w_K)} T_{w_K y^n}
    bool ok = true;
    Int n0 = rd->order();
    for (const auto& r : t.rows) {
      StandardRep sr = standardRepresentative(W, r.cls);
      AffineElement wy = W.multiply(sr.w, sr.y);
      AffineElement wK = sr.K.empty() ? W.identity() : W.longestOf(sr.K);
      Int lw = W.length(sr.w), lwK = W.length(wK);
      for (Int n = n0; n <= n0 + 2; ++n) {
        HeckeElt lhs = tPower(W, wy, n, HeckeMode::Zero);
        AffineElement target = W.multiply(wK, W.power(sr.y, n));
        HeckeElt rhs = heckeBasis(target, HeckeMode::Zero,
                                  LaurentPoly(((n * lw - lwK) % 2 == 0) ? 1 : -1));
        if (!(lhs == rhs)) ok = false;
      }
    }
    phase("lemma-wK-window", ok);
  }

  auto cands = finiteCandidates(*rd, t);

  {  // character formula vs matrix trace in covered cases
    bool ok = true;
    for (const auto& c : cands)
      for (size_t j = 0; j < t.rows.size(); ++j) {
        CharFormulaResult f = charFormula(W, t.rows[j], *c.pd, c.chi);
        if (f.covered && f.value != c.chvec[j]) ok = false;
      }
    phase("char-formula", ok);
  }

  {  // decompose round-trip on a fixed combination
    CharVector v(t.rows.size(), Rat(0));
    std::vector<Rat> want;
    for (size_t i = 0; i < cands.size(); ++i) {
      Rat a = Rat(Int(i % 7) - 3);
      want.push_back(a);
      for (size_t j = 0; j < v.size(); ++j) v[j] += a * cands[i].chvec[j];
    }
    DecomposeResult res = decompose(t, v, cands);
    phase("decompose-roundtrip", res.ok && res.coeff == want);
  }

  {  // rigidity and supersingularity criteria agreement
    bool ok = true;
    for (const auto& c : cands) {
      try {
        isSupersingular(t, coc, c.pi, cands, c.pd->gamma());
      } catch (const std::exception&) {
        ok = false;
      }
      std::vector<int> F0(size_t(rd->numSimple()), 0);
      for (int i = 0; i < rd->numSimple(); ++i) F0[size_t(i)] = i;
      if (c.pd->J() == F0 && !isRigid(t, c.chvec)) ok = false;
    }
    phase("ss-criteria", ok);
  }

  emit(cfg, os.str());
  return allOk ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine 0-Hecke algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--datum", cfg.datum, "catalog name or datum JSON path");
  app.add_option("--max-len", cfg.maxLen, "length bound L");
  app.add_option("--format", cfg.format, "tsv|json|dot")
      ->check(CLI::IsMember({"tsv", "json", "dot"}));
  app.add_option("--mode", cfg.mode, "zero|generic")->check(CLI::IsMember({"zero", "generic"}));
  app.add_option("--out", cfg.out, "output file (default stdout)");

  auto* classes = app.add_subcommand("classes", "cyclic-shift classes with standard pairs");

  auto* hecke = app.add_subcommand("hecke", "T-basis arithmetic");
  hecke->require_subcommand(1);
  std::string aStr, bStr;
  Int powN = 2;
  auto* hmul = hecke->add_subcommand("mul", "product of two basis elements");
  hmul->add_option("--a", aStr, "left element literal")->required();
  hmul->add_option("--b", bStr, "right element literal")->required();
  auto* hpow = hecke->add_subcommand("pow", "power of a basis element");
  hpow->add_option("--elt", aStr, "element literal")->required();
  hpow->add_option("--n", powN, "exponent");
  auto* hiota = hecke->add_subcommand("iota", "involution iota of a basis element");
  hiota->add_option("--elt", aStr, "element literal")->required();
  auto* hebasis = hecke->add_subcommand("ebasis", "E-basis element");
  hebasis->add_option("--elt", aStr, "element literal")->required();

  auto* coc = app.add_subcommand("cocenter", "cocenter projection psi");
  coc->require_subcommand(1);
  std::string eltStr;
  auto* cproj = coc->add_subcommand("project", "psi(T_e) over class labels");
  cproj->add_option("--elt", eltStr, "element literal")->required();
  coc->add_subcommand("check", "commutator vanishing check");

  auto* mod = app.add_subcommand("module", "pi_{J,Gamma,chi} modules");
  mod->require_subcommand(1);
  std::string jStr, gStr, chiStr, inputStr;
  auto* mbuild = mod->add_subcommand("build", "construct a module");
  mbuild->add_option("--J", jStr, "comma-separated simple-root indices");
  mbuild->add_option("--Gamma", gStr, "comma-separated S_aff(J) generator indices");
  mbuild->add_option("--chi", chiStr, "comma-separated rational character values");
  auto* mchart = mod->add_subcommand("chartable", "character table of the finite-character family");
  auto* mdec = mod->add_subcommand("decompose", "decompose a trace vector");
  mdec->add_option("--input", inputStr, "JSON with datum, maxLen, traces")->required();
  mod->add_subcommand("sstest", "rigidity/supersingularity report");

  app.add_subcommand("verify", "bounded verification suite");
  app.add_subcommand("tracetable", "trace matrix Tr(T_Sigma, pi)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (classes->parsed()) return cmdClasses(cfg);
    if (hecke->parsed()) {
      std::string op = hmul->parsed() ? "mul"
                       : hpow->parsed() ? "pow"
                       : hiota->parsed() ? "iota"
                                         : "ebasis";
      return cmdHecke(cfg, op, aStr, bStr, powN);
    }
    if (coc->parsed()) return cmdCocenter(cfg, cproj->parsed() ? "project" : "check", eltStr);
    if (mod->parsed()) {
      if (mbuild->parsed()) return cmdModuleBuild(cfg, jStr, gStr, chiStr);
      if (mdec->parsed()) return cmdModuleDecompose(cfg, inputStr);
      if (mchart->parsed()) return cmdModuleChartable(cfg, false);
      return cmdModuleSstest(cfg);
    }
    if (app.got_subcommand("tracetable")) return cmdModuleChartable(cfg, true);
    return cmdVerify(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
