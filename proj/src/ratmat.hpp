#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace stokes {

// Dense matrix over the rationals with exact arithmetic throughout.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t r, std::size_t c) : rows_(r), cols_(c), e_(r * c, mpq_class(0)) {}
  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpq_class& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const mpq_class& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat operator*(const RatMat& o) const;
  RatMat scaled(const mpq_class& c) const;
  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool is_zero() const;

  std::size_t rank() const;
  std::optional<RatMat> inverse() const;  // nullopt when singular

  // Places the block at offset (i0, j0); bounds must fit.
  void set_block(std::size_t i0, std::size_t j0, const RatMat& b);
  RatMat block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpq_class> e_;
};

// Solves a x = b exactly for every column of b. Returns nullopt when any
// column is inconsistent; when the system is underdetermined the free
// variables are set to zero (callers needing uniqueness check ranks first).
std::optional<RatMat> solve(const RatMat& a, const RatMat& b);

// Columns of b appended to the right of a.
RatMat augment(const RatMat& a, const RatMat& b);

}  // namespace stokes
