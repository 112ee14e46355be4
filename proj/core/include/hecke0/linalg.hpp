#pragma once

#include <hecke0/numeric.hpp>

#include <cassert>
#include <optional>
#include <vector>

namespace hecke0 {

/// Dense matrix over exact rationals. Dimensions stay small (module
/// dimensions and lattice ranks), so no sparsity games are played.
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static QMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const QMat& o) const = default;

  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat operator*(const Rat& c) const;

  QVec apply(const QVec& v) const;

  bool isZero() const;
  Rat trace() const;
  QMat transpose() const;
  QMat pow(long long n) const;  // n >= 0

  /// Gauss-Jordan inverse; nullopt if singular.
  std::optional<QMat> inverse() const;

  int rank() const;

  /// Basis of the column space, returned as a rows() x rank matrix.
  QMat columnSpaceBasis() const;

  /// Solve this * x = b; nullopt if inconsistent. If the system is
  /// underdetermined the free variables are set to zero.
  std::optional<QVec> solve(const QVec& b) const;

  /// Solve this * X = B columnwise; nullopt if any column is inconsistent.
  std::optional<QMat> solveMat(const QMat& b) const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

/// Integer matrix used for lattice computations.
using IMat = std::vector<IVec>;  // row-major: IMat[i] is row i

}  // namespace hecke0
