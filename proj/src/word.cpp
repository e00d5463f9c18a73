#include "word.hpp"

namespace stokes {

GroupWord GroupWord::generator(int g, bool inverse) {
  GroupWord w;
  w.letters_.push_back(2 * g + (inverse ? 1 : 0));
  return w;
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  GroupWord r = *this;
  for (int l : o.letters_) {
    if (!r.letters_.empty() && (r.letters_.back() ^ 1) == l)
      r.letters_.pop_back();
    else
      r.letters_.push_back(l);
  }
  return r;
}

GroupWord GroupWord::inverse() const {
  GroupWord r;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(*it ^ 1);
  return r;
}

std::string GroupWord::str() const {
  if (letters_.empty()) return "1";
  static const char* names[] = {"S", "T", "U"};
  std::string out;
  for (int l : letters_) {
    if (!out.empty()) out += "·";
    out += names[l / 2];
    if (l & 1) out += "^-1";
  }
  return out;
}

}  // namespace stokes
