#include <hecke0/linalg.hpp>

#include <sstream>
#include <stdexcept>

namespace hecke0 {

std::string ratToString(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

Rat ratFromString(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat QMat::operator*(const QMat& o) const {
  assert(cols_ == o.rows_);
  QMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) r(i, j) += x * o(k, j);
    }
  return r;
}

QMat QMat::operator+(const QMat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

QMat QMat::operator-(const QMat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

QMat QMat::operator*(const Rat& c) const {
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

QVec QMat::apply(const QVec& v) const {
  assert(int(v.size()) == cols_);
  QVec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

bool QMat::isZero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

Rat QMat::trace() const {
  assert(rows_ == cols_);
  Rat t = 0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

QMat QMat::transpose() const {
  QMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

QMat QMat::pow(long long n) const {
  assert(rows_ == cols_ && n >= 0);
  QMat r = identity(rows_), b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

namespace {

// Row echelon reduction of an augmented block [A | B]; returns pivot columns
// of the A-part. Operates in place.
std::vector<int> rowReduce(QMat& a, int splitCol) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < splitCol && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rat inv = Rat(1) / a(r, c);
    for (int j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (int j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<QMat> QMat::inverse() const {
  assert(rows_ == cols_);
  QMat aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_ + i) = 1;
  }
  auto pivots = rowReduce(aug, cols_);
  if (int(pivots.size()) != cols_) return std::nullopt;
  QMat inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
  return inv;
}

int QMat::rank() const {
  QMat tmp = *this;
  return int(rowReduce(tmp, cols_).size());
}

QMat QMat::columnSpaceBasis() const {
  QMat tmp = *this;
  auto pivots = rowReduce(tmp, cols_);
  QMat b(rows_, int(pivots.size()));
  for (size_t k = 0; k < pivots.size(); ++k)
    for (int i = 0; i < rows_; ++i) b(i, int(k)) = (*this)(i, pivots[k]);
  return b;
}

std::optional<QVec> QMat::solve(const QVec& b) const {
  assert(int(b.size()) == rows_);
  QMat aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  auto pivots = rowReduce(aug, cols_);
  for (int i = int(pivots.size()); i < rows_; ++i)
    if (aug(i, cols_) != 0) return std::nullopt;
  QVec x(cols_, Rat(0));
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(int(k), cols_);
  return x;
}

std::optional<QMat> QMat::solveMat(const QMat& b) const {
  assert(b.rows() == rows_);
  QMat x(cols_, b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    QVec col(rows_);
    for (int i = 0; i < rows_; ++i) col[i] = b(i, j);
    auto sol = solve(col);
    if (!sol) return std::nullopt;
    for (int i = 0; i < cols_; ++i) x(i, j) = (*sol)[i];
  }
  return x;
}

}  // namespace hecke0
