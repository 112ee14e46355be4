#include <hecke0/catalog.hpp>

#include <json.hpp>

#include <map>
#include <stdexcept>

namespace hecke0 {

namespace {

IMat readMat(const nlohmann::json& j) {
  IMat m;
  for (const auto& row : j) {
    IVec r;
    for (const auto& x : row) r.push_back(x.get<Int>());
    m.push_back(r);
  }
  return m;
}

// Built-in data. Pairing is the identity throughout: X and Y share
// coordinates and <x, y> is the dot product.
const std::map<std::string, std::string>& builtins() {
  static const std::map<std::string, std::string> m = {
      {"A1-sc", R"({
  "name": "A1-sc",
  "xRank": 1,
  "pairing": [[1]],
  "simpleRoots": [[2]],
  "simpleCoroots": [[1]]
})"},
      {"A1-ad", R"({
  "name": "A1-ad",
  "xRank": 1,
  "pairing": [[1]],
  "simpleRoots": [[1]],
  "simpleCoroots": [[2]]
})"},
      {"A1xA1", R"({
  "name": "A1xA1",
  "xRank": 2,
  "pairing": [[1, 0], [0, 1]],
  "simpleRoots": [[2, 0], [0, 2]],
  "simpleCoroots": [[1, 0], [0, 1]]
})"},
      {"A2-sc", R"({
  "name": "A2-sc",
  "xRank": 2,
  "pairing": [[1, 0], [0, 1]],
  "simpleRoots": [[2, -1], [-1, 2]],
  "simpleCoroots": [[1, 0], [0, 1]]
})"},
      {"A2-ad", R"({
  "name": "A2-ad",
  "xRank": 2,
  "pairing": [[1, 0], [0, 1]],
  "simpleRoots": [[1, 0], [0, 1]],
  "simpleCoroots": [[2, -1], [-1, 2]]
})"},
      {"C2", R"({
  "name": "C2",
  "xRank": 2,
  "pairing": [[1, 0], [0, 1]],
  "simpleRoots": [[1, -1], [0, 2]],
  "simpleCoroots": [[1, -1], [0, 1]]
})"},
      {"G2", R"({
  "name": "G2",
  "xRank": 2,
  "pairing": [[1, 0], [0, 1]],
  "simpleRoots": [[1, 0], [0, 1]],
  "simpleCoroots": [[2, -3], [-1, 2]]
})"},
      {"GL2", R"({
  "name": "GL2",
  "xRank": 2,
  "pairing": [[1, 0], [0, 1]],
  "simpleRoots": [[1, -1]],
  "simpleCoroots": [[1, -1]]
})"}};
  return m;
}

}  // namespace

DatumPtr datumFromJson(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::string name = j.at("name").get<std::string>();
  int rank = j.at("xRank").get<int>();
  IMat pairing = readMat(j.at("pairing"));
  IMat roots = readMat(j.at("simpleRoots"));
  IMat coroots = readMat(j.at("simpleCoroots"));
  return RootDatum::build(name, rank, pairing, roots, coroots);
}

std::vector<std::string> catalogNames() {
  std::vector<std::string> names;
  for (const auto& [k, v] : builtins()) names.push_back(k);
  return names;
}

const std::string& catalogJson(const std::string& name) {
  auto it = builtins().find(name);
  if (it == builtins().end()) throw DatumError("unknown catalog datum: " + name);
  return it->second;
}

DatumPtr catalogDatum(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, DatumPtr> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, datumFromJson(catalogJson(name))).first;
  return it->second;
}

}  // namespace hecke0
