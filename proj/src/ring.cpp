#include "ring.hpp"

#include "errors.hpp"

namespace stokes {

void RingElement::insert(const GroupWord& w, const mpq_class& c) {
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

RingElement RingElement::scalar(mpq_class c) { return word(GroupWord(), std::move(c)); }

RingElement RingElement::word(GroupWord w, mpq_class c) {
  RingElement e;
  e.insert(w, c);
  return e;
}

RingElement RingElement::operator+(const RingElement& o) const {
  RingElement r = *this;
  for (const auto& [w, c] : o.terms_) r.insert(w, c);
  return r;
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator-() const {
  RingElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

RingElement RingElement::operator*(const RingElement& o) const {
  RingElement r;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) r.insert(w1 * w2, c1 * c2);
  return r;
}

std::optional<std::pair<mpq_class, GroupWord>> RingElement::single_term() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [w, c] = *terms_.begin();
  return std::pair{c, w};
}

std::string RingElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    bool neg = c < 0;
    mpq_class a = abs(c);
    std::string term;
    if (w.is_identity())
      term = rat_str(a);
    else if (a == 1)
      term = w.str();
    else
      term = rat_str(a) + "·" + w.str();
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

RingMat RingMat::identity(std::size_t n) {
  RingMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RingElement::one();
  return m;
}

RingMat RingMat::operator*(const RingMat& o) const {
  if (cols != o.rows) fail("Internal", "ring matrix shape mismatch");
  RingMat r(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < o.cols; ++j) {
      RingElement acc;
      for (std::size_t k = 0; k < cols; ++k) acc = acc + at(i, k) * o.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

std::string RingMat::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows; ++i) {
    out += "[";
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) out += ", ";
      out += at(i, j).str();
    }
    out += "]";
    if (i + 1 < rows) out += ",";
  }
  return out + "]";
}

}  // namespace stokes
