#pragma once

#include <optional>
#include <string>

#include "errors.hpp"
#include "rational.hpp"

namespace stokes {

// Element of Q(i). Both parts are canonical mpq_class values.
struct GaussianRational {
  mpq_class re;
  mpq_class im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(mpq_class r) : re(std::move(r)), im(0) {}
  GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }
  bool operator<(const GaussianRational& o) const {
    if (re != o.re) return re < o.re;
    return im < o.im;
  }

  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational conj() const { return {re, -im}; }

  GaussianRational inverse() const {
    if (is_zero()) fail("Internal", "inverse of zero Gaussian rational");
    mpq_class n = re * re + im * im;
    return {re / n, -im / n};
  }
  GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

  GaussianRational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussianRational acc(mpq_class(1)), base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  std::string str() const {
    if (im == 0) return rat_str(re);
    std::string ipart;
    mpq_class ia = abs(im);
    if (ia != 1) ipart = rat_str(ia) + "·";
    ipart += "i";
    if (re == 0) return (im < 0 ? "-" : "") + ipart;
    return rat_str(re) + (im < 0 ? " - " : " + ") + ipart;
  }
};

inline GaussianRational gauss_i() { return {mpq_class(0), mpq_class(1)}; }

}  // namespace stokes
