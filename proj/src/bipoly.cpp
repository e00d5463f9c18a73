#include "bipoly.hpp"

#include <algorithm>

namespace stokes {

void BiPoly::insert(Expo e, GaussianRational c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

BiPoly BiPoly::constant(GaussianRational c) { return monomial(std::move(c), 0, 0); }

BiPoly BiPoly::monomial(GaussianRational c, long a, long b) {
  if (a < 0 || b < 0) fail("Internal", "negative exponent in polynomial monomial");
  BiPoly p;
  p.insert({a, b}, std::move(c));
  return p;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.insert(e, c);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      r.insert({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  return r;
}

BiPoly BiPoly::pow(long e) const {
  if (e < 0) fail("Internal", "negative polynomial power");
  BiPoly r = constant(GaussianRational(mpq_class(1)));
  for (long i = 0; i < e; ++i) r = r * *this;
  return r;
}

GaussianRational BiPoly::eval(const GaussianRational& x, const GaussianRational& y) const {
  GaussianRational acc;
  for (const auto& [e, c] : terms_) acc = acc + c * x.pow(e.first) * y.pow(e.second);
  return acc;
}

std::pair<GaussianRational, BiPoly::Expo> BiPoly::sole_term() const {
  if (!is_monomial()) fail("Internal", "sole_term on non-monomial");
  const auto& [e, c] = *terms_.begin();
  return {c, e};
}

BiPoly::Expo BiPoly::content_exponents() const {
  if (terms_.empty()) return {0, 0};
  long a = -1, b = -1;
  for (const auto& [e, c] : terms_) {
    a = (a < 0) ? e.first : std::min(a, e.first);
    b = (b < 0) ? e.second : std::min(b, e.second);
  }
  return {a, b};
}

BiPoly BiPoly::shifted(long a, long b) const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Expo{e.first - a, e.second - b}, c);
  return r;
}

std::string BiPoly::str(const std::string& x, const std::string& y) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c.re < 0 || (c.re == 0 && c.im < 0);
    GaussianRational a = neg ? -c : c;
    std::string mono;
    if (e.first > 0) mono = x + (e.first > 1 ? "^" + std::to_string(e.first) : "");
    if (e.second > 0) {
      if (!mono.empty()) mono += "·";
      mono += y + (e.second > 1 ? "^" + std::to_string(e.second) : "");
    }
    std::string cs;
    bool unit_coeff = (a.re == 1 && a.im == 0);
    if (!unit_coeff || mono.empty()) {
      cs = a.str();
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
    }
    std::string term = cs;
    if (!mono.empty()) {
      if (!term.empty()) term += "·";
      term += mono;
    }
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

std::optional<BiPoly> try_divide(const BiPoly& p, const BiPoly& d) {
  if (d.is_zero()) fail("Internal", "polynomial division by zero");
  BiPoly r = p, q;
  const auto& [de, dc] = *d.terms().rbegin();
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms().rbegin();
    long a = re.first - de.first, b = re.second - de.second;
    if (a < 0 || b < 0) return std::nullopt;
    BiPoly t = BiPoly::monomial(rc / dc, a, b);
    q = q + t;
    r = r - t * d;
  }
  return q;
}

namespace {

// Folds one factor into the canonical list: content out, constants into the
// coefficient, equal polynomials merged.
void add_factor(LaurentExpression& e, BiPoly p, long exp) {
  if (exp == 0) return;
  if (p.is_zero()) {
    if (exp < 0) fail("Internal", "division by the zero polynomial");
    e.coeff = GaussianRational();
    e.x_exp = e.y_exp = 0;
    e.factors.clear();
    return;
  }
  auto [a, b] = p.content_exponents();
  e.x_exp += a * exp;
  e.y_exp += b * exp;
  p = p.shifted(a, b);
  if (p.is_monomial()) {
    e.coeff = e.coeff * p.sole_term().first.pow(exp);
    return;
  }
  for (auto& [fp, fe] : e.factors) {
    if (fp == p) {
      fe += exp;
      return;
    }
  }
  e.factors.emplace_back(std::move(p), exp);
}

}  // namespace

LaurentExpression normalize(LaurentExpression in) {
  LaurentExpression e;
  e.coeff = in.coeff;
  e.x_exp = in.x_exp;
  e.y_exp = in.y_exp;
  for (auto& [p, exp] : in.factors) {
    add_factor(e, std::move(p), exp);
    if (e.coeff.is_zero()) return e;
  }

  // Cancellation: divide other factors by the denominator bases. Writing
  // P_i = P_j * Q turns P_i^{e_i} P_j^{e_j} into Q^{e_i} P_j^{e_j + e_i};
  // iterating collapses numerators and power-of-base denominators onto the
  // base itself. An emptied slot keeps its polynomial so it can still serve
  // as a divisor while its exponent is zero.
  std::vector<std::size_t> divisors;
  for (std::size_t j = 0; j < e.factors.size(); ++j)
    if (e.factors[j].second < 0) divisors.push_back(j);
  auto fold_slot = [&e](std::size_t i, BiPoly p) {
    auto [a, b] = p.content_exponents();
    long exp = e.factors[i].second;
    e.x_exp += a * exp;
    e.y_exp += b * exp;
    p = p.shifted(a, b);
    if (p.is_monomial()) {
      e.coeff = e.coeff * p.sole_term().first.pow(exp);
      e.factors[i] = {BiPoly(), 0};
    } else {
      e.factors[i].first = std::move(p);
    }
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j : divisors) {
      if (e.factors[j].first.is_zero()) continue;
      for (std::size_t i = 0; i < e.factors.size(); ++i) {
        if (i == j || e.factors[i].second == 0) continue;
        auto q = try_divide(e.factors[i].first, e.factors[j].first);
        if (!q) continue;
        e.factors[j].second += e.factors[i].second;
        fold_slot(i, std::move(*q));
        changed = true;
      }
    }
  }

  LaurentExpression out;
  out.coeff = e.coeff;
  out.x_exp = e.x_exp;
  out.y_exp = e.y_exp;
  for (auto& [p, exp] : e.factors)
    if (exp != 0 && !p.is_zero()) add_factor(out, std::move(p), exp);
  out.factors.erase(std::remove_if(out.factors.begin(), out.factors.end(),
                                   [](const auto& f) { return f.second == 0; }),
                    out.factors.end());
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& l, const auto& r) {
    if (l.second != r.second) return l.second < r.second;
    return l.first.terms() < r.first.terms();
  });
  return out;
}

bool laurent_equal(const LaurentExpression& a, const LaurentExpression& b) {
  auto split = [](const LaurentExpression& e) {
    BiPoly num = BiPoly::constant(e.coeff), den = BiPoly::constant(GaussianRational(mpq_class(1)));
    auto& xn = e.x_exp >= 0 ? num : den;
    xn = xn * BiPoly::monomial(GaussianRational(mpq_class(1)), std::abs(e.x_exp), 0);
    auto& yn = e.y_exp >= 0 ? num : den;
    yn = yn * BiPoly::monomial(GaussianRational(mpq_class(1)), 0, std::abs(e.y_exp));
    for (const auto& [p, exp] : e.factors) {
      if (exp >= 0)
        num = num * p.pow(exp);
      else
        den = den * p.pow(-exp);
    }
    return std::pair{num, den};
  };
  auto [an, ad] = split(a);
  auto [bn, bd] = split(b);
  return an * bd == bn * ad;
}

std::string LaurentExpression::str(const std::string& x, const std::string& y) const {
  if (coeff.is_zero()) return "0";
  std::vector<std::string> num, den;
  std::string sign;
  GaussianRational c = coeff;
  if (c.im == 0 && c.re < 0) {
    sign = "-";
    c = -c;
  }
  if (!(c.re == 1 && c.im == 0)) {
    std::string cs = c.str();
    if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
    num.push_back(cs);
  }
  auto mono = [](const std::string& v, long e) {
    return e == 1 ? v : v + "^" + std::to_string(e);
  };
  if (x_exp > 0) num.push_back(mono(x, x_exp));
  if (x_exp < 0) den.push_back(mono(x, -x_exp));
  if (y_exp > 0) num.push_back(mono(y, y_exp));
  if (y_exp < 0) den.push_back(mono(y, -y_exp));
  for (const auto& [p, e] : factors) {
    std::string ps = "(" + p.str(x, y) + ")";
    if (std::abs(e) > 1) ps += "^" + std::to_string(std::abs(e));
    (e > 0 ? num : den).push_back(ps);
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& p : v) {
      if (!s.empty()) s += "·";
      s += p;
    }
    return s;
  };
  std::string ns = num.empty() ? "1" : join(num);
  if (den.empty()) return sign + ns;
  std::string ds = join(den);
  if (den.size() > 1) ds = "(" + ds + ")";
  return sign + ns + "/" + ds;
}

}  // namespace stokes
