#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hecke0 {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Integer vector in the character lattice X (or cocharacter lattice Y).
using IVec = std::vector<Int>;
/// Rational vector in X_Q.
using QVec = std::vector<Rat>;

inline QVec toQ(const IVec& v) {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = v[i];
  return q;
}

inline IVec addVec(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IVec subVec(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IVec negVec(const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline IVec scaleVec(Int c, const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool isZeroVec(const IVec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

inline QVec addVec(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec scaleVec(const Rat& c, const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool isZeroVec(const QVec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

std::string ratToString(const Rat& r);
Rat ratFromString(const std::string& s);

}  // namespace hecke0
