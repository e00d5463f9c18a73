#include "ratmat.hpp"

#include "errors.hpp"

namespace stokes {

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail("Internal", "matrix shape mismatch");
  RatMat r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const { return *this + o.scaled(-1); }

RatMat RatMat::scaled(const mpq_class& c) const {
  RatMat r = *this;
  for (auto& x : r.e_) x *= c;
  return r;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) fail("Internal", "matrix shape mismatch");
  RatMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

bool RatMat::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(RatMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    mpq_class inv = 1 / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      mpq_class f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t RatMat::rank() const {
  RatMat m = *this;
  return echelon(m).size();
}

std::optional<RatMat> RatMat::inverse() const {
  if (rows_ != cols_) fail("Internal", "inverse of non-square matrix");
  RatMat aug = augment(*this, identity(rows_));
  auto pivots = echelon(aug);
  if (pivots.size() != rows_ || (rows_ > 0 && pivots.back() >= rows_)) return std::nullopt;
  return aug.block(0, cols_, rows_, cols_);
}

void RatMat::set_block(std::size_t i0, std::size_t j0, const RatMat& b) {
  if (i0 + b.rows_ > rows_ || j0 + b.cols_ > cols_) fail("Internal", "block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

RatMat RatMat::block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
  if (i0 + r > rows_ || j0 + c > cols_) fail("Internal", "block out of range");
  RatMat b(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) b.at(i, j) = at(i0 + i, j0 + j);
  return b;
}

std::string RatMat::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += rat_str(at(i, j));
    }
    out += "]";
    if (i + 1 < rows_) out += ",";
  }
  return out + "]";
}

RatMat augment(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows()) fail("Internal", "augment shape mismatch");
  RatMat m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

std::optional<RatMat> solve(const RatMat& a, const RatMat& b) {
  RatMat aug = augment(a, b);
  auto pivots = echelon(aug);
  // consistency: no pivot may fall in the appended columns
  for (std::size_t p : pivots)
    if (p >= a.cols()) return std::nullopt;
  RatMat x(a.cols(), b.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[k], j) = aug.at(k, a.cols() + j);
  return x;
}

}  // namespace stokes
