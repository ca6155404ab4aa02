#include "bcr/rat_matrix.hpp"

#include <stdexcept>

namespace bcr {

RatMatrix::RatMatrix(const std::vector<std::vector<Rat>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    for (const auto& x : r) a_.push_back(x);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::all_integer() const {
  for (const auto& x : a_)
    if (!rat_is_integer(x)) return false;
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix dimension mismatch in +");
  RatMatrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix dimension mismatch in -");
  RatMatrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("matrix dimension mismatch in *");
  RatMatrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, j) += aik * o.at(k, j);
    }
  return m;
}

Rat RatMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rat t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Rat RatMatrix::trace_of_product(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_ || a.rows_ != b.cols_)
    throw std::invalid_argument("matrix dimension mismatch in trace_of_product");
  Rat t = 0;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) t += a.at(i, j) * b.at(j, i);
  return t;
}

RatMatrix RatMatrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = rows_;
  RatMatrix work = *this, inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && work.at(piv, col) == 0) ++piv;
    if (piv == n) throw std::invalid_argument("singular matrix");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(piv, j), work.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    Rat d = work.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work.at(i, col) == 0) continue;
      Rat f = work.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(i, j) -= f * work.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Rat RatMatrix::det() const {
  if (!is_square()) throw std::invalid_argument("det of non-square matrix");
  std::size_t n = rows_;
  RatMatrix work = *this;
  Rat d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && work.at(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(work.at(piv, j), work.at(col, j));
      d = -d;
    }
    d *= work.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (work.at(i, col) == 0) continue;
      Rat f = work.at(i, col) / work.at(col, col);
      for (std::size_t j = col; j < n; ++j)
        work.at(i, j) -= f * work.at(col, j);
    }
  }
  return d;
}

RatMatrix RatMatrix::block_diag(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      m.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
  return m;
}

} // namespace bcr
