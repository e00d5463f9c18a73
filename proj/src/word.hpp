#pragma once

#include <string>
#include <vector>

namespace stokes {

// Reduced word in the free group on S, T, U. Letters are coded as 2g for a
// generator and 2g+1 for its inverse, g in {0 (S), 1 (T), 2 (U)}.
class GroupWord {
 public:
  GroupWord() = default;

  static GroupWord generator(int g, bool inverse = false);
  static GroupWord s() { return generator(0); }
  static GroupWord t() { return generator(1); }
  static GroupWord u() { return generator(2); }

  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  const std::vector<int>& letters() const { return letters_; }

  GroupWord operator*(const GroupWord& o) const;  // reduced concatenation
  GroupWord inverse() const;

  bool operator==(const GroupWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const GroupWord& o) const { return !(*this == o); }

  std::string str() const;  // "1", "S", "S·T^-1", ...

 private:
  std::vector<int> letters_;
};

// Length first, then lexicographic: the canonical term order for the ring.
struct LenLexLess {
  bool operator()(const GroupWord& a, const GroupWord& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.letters() < b.letters();
  }
};

}  // namespace stokes
