#pragma once

#include <hecke0/weyl.hpp>

#include <string>

namespace hecke0 {

/// Element literals: '*'-separated factors, each one of
///   e            identity
///   t[c1,...,cn] translation by (c1,...,cn) in X
///   sK           finite simple reflection, K = 1-based simple index
///   aK           affine simple reflection of component K (1-based)
///   oK           K-th Omega generator lift (1-based)
/// Example: "t[1,2]*s1*s2". Factors multiply left to right.
AffineElement parseElement(const Weyl& W, const std::string& text);

/// Normal form "t[...]*s1*..." (identity prints as "e"); parse round-trips.
std::string printElement(const Weyl& W, const AffineElement& e);

}  // namespace hecke0
