#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"
#include "word.hpp"

namespace stokes {

// Element of the rational group algebra of the free group on S, T, U.
// Terms are kept in length-lexicographic order with no zero coefficients,
// so equality and printing are canonical.
class RingElement {
 public:
  RingElement() = default;
  static RingElement scalar(mpq_class c);
  static RingElement one() { return scalar(1); }
  static RingElement word(GroupWord w, mpq_class c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<GroupWord, mpq_class, LenLexLess>& terms() const { return terms_; }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;

  bool operator==(const RingElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const RingElement& o) const { return !(*this == o); }

  // (coefficient, word) when the element is a single term, else nullopt.
  std::optional<std::pair<mpq_class, GroupWord>> single_term() const;

  std::string str() const;  // "0", "1 - S·T^-1", "-S·T^-1", "U - U·T·S^-1"

 private:
  void insert(const GroupWord& w, const mpq_class& c);
  std::map<GroupWord, mpq_class, LenLexLess> terms_;
};

// Dense matrix of ring elements; used for d0, N and the Stokes blocks.
struct RingMat {
  std::size_t rows = 0, cols = 0;
  std::vector<RingElement> entries;  // row-major

  RingMat() = default;
  RingMat(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
  RingElement& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const RingElement& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  static RingMat identity(std::size_t n);
  RingMat operator*(const RingMat& o) const;
  bool operator==(const RingMat& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
  }
  std::string str() const;  // "[[-1, 1 - S·T^-1],[0, -S·T^-1]]"
};

}  // namespace stokes
