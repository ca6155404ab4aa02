#ifndef BCR_RAT_MATRIX_HPP
#define BCR_RAT_MATRIX_HPP

#include <vector>

#include "bcr/rational.hpp"

namespace bcr {

// Dense matrix over Rat. The matrices in this library are tiny (Seifert
// blocks of size <= a few dozen), so a plain row-major vector is all we need.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  explicit RatMatrix(const std::vector<std::vector<Rat>>& rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool all_integer() const;

  RatMatrix transpose() const;
  RatMatrix operator-() const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const = default;

  Rat trace() const;

  // Tr(a * b) without forming the product.
  static Rat trace_of_product(const RatMatrix& a, const RatMatrix& b);

  // Exact inverse via Gauss-Jordan elimination; throws std::invalid_argument
  // if the matrix is singular or not square.
  RatMatrix inverse() const;

  Rat det() const;

  // [[a,0],[0,b]]
  static RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

} // namespace bcr

#endif
