#include "factor.hpp"

#include <mpfr.h>

#include <algorithm>
#include <optional>

#include "cyclo.hpp"
#include "errors.hpp"

namespace stokes {

ExponentialFactor ExponentialFactor::polar(long q, PolarCoefficient mu0) {
  if (q < 1) fail("BadInput", "exponential factor needs q >= 1");
  if (mu0.modulus <= 0) fail("BadInput", "polar coefficient needs modulus > 0");
  ExponentialFactor f;
  f.zero_ = false;
  f.q_ = q;
  f.mu0_ = std::move(mu0);
  return f;
}

namespace {

std::string coeff_str(const PolarCoefficient& c) {
  const mpq_class& a = c.argument.pi_units();
  std::string m = rat_str(c.modulus);
  if (a == 0) return m;
  if (a == 1) return "-" + m;
  if (a == mpq_class(1, 2)) return c.modulus == 1 ? "i" : m + "·i";
  if (a == mpq_class(3, 2)) return c.modulus == 1 ? "-i" : "-" + m + "·i";
  return m + "·e^(" + c.argument.str() + "·i)";
}

}  // namespace

std::string ExponentialFactor::str() const {
  if (zero_) return "0";
  std::string c = coeff_str(mu0_);
  if (c == "1" && q_ == 1) return "1/t";
  std::string pole = "t^-" + std::to_string(q_);
  if (c == "1") return pole;
  if (c == "-1") return "-" + pole;
  return c + "·" + pole;
}

namespace {

struct PolarTerm {
  mpq_class mod;  // > 0
  Angle arg;
};

// Leading term of phi - psi as a short polar sum c = sum mod_i e^{i arg_i}
// times t^(-q); nullopt means the difference vanishes (Equal).
struct Leading {
  long q;
  std::vector<PolarTerm> terms;  // size 1 or 2, nonzero sum
};

std::optional<Leading> leading_difference(const ExponentialFactor& phi,
                                          const ExponentialFactor& psi) {
  if (phi.is_zero() && psi.is_zero()) return std::nullopt;
  if (phi.is_zero())
    return Leading{psi.q(), {{psi.mu0().modulus, psi.mu0().argument + Angle(mpq_class(1))}}};
  if (psi.is_zero()) return Leading{phi.q(), {{phi.mu0().modulus, phi.mu0().argument}}};
  if (phi.q() > psi.q()) return Leading{phi.q(), {{phi.mu0().modulus, phi.mu0().argument}}};
  if (phi.q() < psi.q())
    return Leading{psi.q(), {{psi.mu0().modulus, psi.mu0().argument + Angle(mpq_class(1))}}};
  if (phi.mu0() == psi.mu0()) return std::nullopt;
  return Leading{phi.q(),
                 {{phi.mu0().modulus, phi.mu0().argument},
                  {psi.mu0().modulus, psi.mu0().argument + Angle(mpq_class(1))}}};
}

// sign of Re(c * e^{-i shift}) = sum mod_i cos(arg_i - shift)
int re_sign(const std::vector<PolarTerm>& terms, const Angle& shift) {
  std::vector<CosTerm> combo;
  combo.reserve(terms.size());
  for (const auto& t : terms) combo.push_back({t.mod, (t.arg - shift).pi_units()});
  return sign_of_cos_combination(combo);
}

// Im(c * e^{-i shift}) == 0, via sin x = cos(x - pi/2)
bool im_is_zero(const std::vector<PolarTerm>& terms, const Angle& shift) {
  std::vector<CosTerm> combo;
  combo.reserve(terms.size());
  for (const auto& t : terms)
    combo.push_back({t.mod, (t.arg - shift - Angle(mpq_class(1, 2))).pi_units()});
  return cos_combination_is_zero(combo);
}

// Exact argument of the polar sum, when it is a rational multiple of pi.
// A floating estimate (escalating precision) proposes the candidate k in
// arg = k*pi/M; the candidate is then verified exactly: Im(c e^{-i arg}) = 0
// and Re(c e^{-i arg}) > 0. Soundness never rests on the float path.
std::optional<Angle> detect_rational_arg(const std::vector<PolarTerm>& terms) {
  mpz_class L = 1;
  mpq_class csum = 1;
  for (const auto& t : terms) {
    L = lcm_z(L, t.arg.pi_units().get_den());
    csum += t.mod;
  }
  if (L > 4096) fail("AngleTooFine", "angle denominators too large for argument detection");
  unsigned long M = 2 * L.get_ui();

  for (long prec = 128; prec <= (1 << 16); prec *= 2) {
    mpfr_t pi, re, im, ang, c, mag, err, gamma;
    mpfr_inits2(prec, pi, re, im, ang, c, mag, err, gamma, nullptr);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_ui(re, 0, MPFR_RNDN);
    mpfr_set_ui(im, 0, MPFR_RNDN);
    for (const auto& t : terms) {
      mpfr_set_q(ang, t.arg.pi_units().get_mpq_t(), MPFR_RNDN);
      mpfr_mul(ang, ang, pi, MPFR_RNDN);
      mpfr_set_q(c, t.mod.get_mpq_t(), MPFR_RNDN);
      mpfr_t s;
      mpfr_init2(s, prec);
      mpfr_cos(s, ang, MPFR_RNDN);
      mpfr_mul(s, s, c, MPFR_RNDN);
      mpfr_add(re, re, s, MPFR_RNDN);
      mpfr_sin(s, ang, MPFR_RNDN);
      mpfr_mul(s, s, c, MPFR_RNDN);
      mpfr_add(im, im, s, MPFR_RNDN);
      mpfr_clear(s);
    }
    mpfr_hypot(mag, re, im, MPFR_RNDN);
    // |c| must dominate the rounding error by a factor of M so the angle
    // estimate is accurate to well under pi/(2M), pinning the candidate.
    mpfr_set_q(err, csum.get_mpq_t(), MPFR_RNDN);
    mpfr_mul_2si(err, err, 40 - prec, MPFR_RNDN);
    mpfr_mul_ui(err, err, M, MPFR_RNDN);
    bool usable = mpfr_cmp(mag, err) > 0;
    long j0 = 0;
    if (usable) {
      mpfr_atan2(gamma, im, re, MPFR_RNDN);  // in (-pi, pi]
      mpfr_div(gamma, gamma, pi, MPFR_RNDN);
      mpfr_mul_ui(gamma, gamma, M, MPFR_RNDN);
      mpfr_round(gamma, gamma);
      j0 = mpfr_get_si(gamma, MPFR_RNDN);
    }
    mpfr_clears(pi, re, im, ang, c, mag, err, gamma, nullptr);
    if (!usable) continue;

    for (long dj = -1; dj <= 1; ++dj) {
      Angle cand(mpq_class(j0 + dj) / mpq_class(M));
      if (!im_is_zero(terms, cand)) continue;
      if (re_sign(terms, cand) > 0) return cand;
    }
    return std::nullopt;  // estimate was trustworthy and no candidate verified
  }
  fail("Internal", "argument detection exceeded the precision cap");
}

}  // namespace

ComparisonResult compare_at(const ExponentialFactor& phi, const ExponentialFactor& psi,
                            const Angle& theta) {
  auto lead = leading_difference(phi, psi);
  if (!lead) return ComparisonResult::Equal;
  int s = re_sign(lead->terms, theta.scaled(lead->q));
  if (s > 0) return ComparisonResult::GreaterEq;
  if (s < 0) return ComparisonResult::LessEq;
  return ComparisonResult::Stokes;
}

std::vector<Angle> stokes_directions(const ExponentialFactor& phi, const ExponentialFactor& psi) {
  auto lead = leading_difference(phi, psi);
  if (!lead) fail("EqualFactors", "equal factors have no Stokes directions");

  Angle argc;
  if (lead->terms.size() == 1) {
    argc = lead->terms[0].arg;
  } else {
    auto detected = detect_rational_arg(lead->terms);
    if (!detected)
      fail("UnrepresentableAngle",
           "leading coefficient argument is not a rational multiple of pi");
    argc = *detected;
  }

  std::vector<Angle> dirs;
  dirs.reserve(2 * lead->q);
  for (long j = 0; j < lead->q; ++j) {
    for (int s : {-1, 1}) {
      // theta = (arg(c) - s*pi/2 + 2*pi*j) / q
      mpq_class v = (argc.pi_units() - mpq_class(s, 2) + mpq_class(2 * j)) / mpq_class(lead->q);
      dirs.emplace_back(v);
    }
  }
  std::sort(dirs.begin(), dirs.end());
  return dirs;
}

std::vector<ExponentialFactor> total_order(const std::vector<ExponentialFactor>& factors,
                                           const Angle& theta0) {
  std::size_t n = factors.size();
  std::vector<std::vector<ComparisonResult>> cmp(n, std::vector<ComparisonResult>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ComparisonResult r = compare_at(factors[i], factors[j], theta0);
      if (r == ComparisonResult::Stokes)
        fail("StokesDirectionHit", "theta is a Stokes direction of the pair (" +
                                       factors[i].str() + ", " + factors[j].str() +
                                       ") at positions " + std::to_string(i) + "," +
                                       std::to_string(j));
      cmp[i][j] = r;
      cmp[j][i] = r == ComparisonResult::LessEq    ? ComparisonResult::GreaterEq
                  : r == ComparisonResult::GreaterEq ? ComparisonResult::LessEq
                                                     : r;
    }
  }
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return cmp[a][b] == ComparisonResult::LessEq;
  });
  std::vector<ExponentialFactor> out;
  out.reserve(n);
  for (std::size_t i : idx) out.push_back(factors[i]);
  return out;
}

}  // namespace stokes
