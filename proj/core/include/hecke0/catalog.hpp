#pragma once

#include <hecke0/root_datum.hpp>

#include <string>
#include <vector>

namespace hecke0 {

/// Parses a root datum from its JSON description:
///   {"name", "xRank", "pairing": [[...]], "simpleRoots": [[...]],
///    "simpleCoroots": [[...]]}
DatumPtr datumFromJson(const std::string& text);

/// Built-in catalog: A1-sc, A1-ad, A1xA1, A2-sc, A2-ad, C2, G2, GL2.
/// GL2 has infinite Omega and is used for element arithmetic only.
std::vector<std::string> catalogNames();
DatumPtr catalogDatum(const std::string& name);
/// The JSON text of a built-in datum (also shipped under data/).
const std::string& catalogJson(const std::string& name);

}  // namespace hecke0
