#include "cyclo.hpp"

#include <mpfr.h>

#include <map>

#include "angle.hpp"
#include "errors.hpp"

namespace stokes {

namespace {

// Keeps the Phi_M remainder step cheap; angle denominators whose lcm exceeds
// kMaxOrder/2 are rejected rather than risking a quadratic blowup.
constexpr unsigned long kMaxOrder = 8192;

int moebius(unsigned long n) {
  int primes = 0;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++primes;
    }
  }
  if (n > 1) ++primes;
  return (primes % 2 == 0) ? 1 : -1;
}

// p *= (x^k - 1)
void mul_binomial(ZPoly& p, unsigned long k) {
  ZPoly r(p.size() + k);
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i + k] += p[i];
    r[i] -= p[i];
  }
  p.swap(r);
}

// p /= (x^k - 1), exact by construction of the Moebius product
void div_binomial(ZPoly& p, unsigned long k) {
  ZPoly q(p.size() - k);
  for (std::size_t i = 0; i < q.size(); ++i) {
    mpz_class carry = (i >= k) ? q[i - k] : mpz_class(0);
    q[i] = carry - p[i];
  }
  p.swap(q);
}

}  // namespace

const ZPoly& cyclotomic(unsigned long M) {
  static std::map<unsigned long, ZPoly> memo;
  auto it = memo.find(M);
  if (it != memo.end()) return it->second;
  if (M == 0 || M > kMaxOrder) fail("AngleTooFine", "cyclotomic order out of supported range");

  ZPoly p{mpz_class(1)};
  for (unsigned long d = 1; d <= M; ++d) {
    if (M % d == 0 && moebius(d) == 1) mul_binomial(p, M / d);
  }
  for (unsigned long d = 1; d <= M; ++d) {
    if (M % d == 0 && moebius(d) == -1) div_binomial(p, M / d);
  }
  return memo.emplace(M, std::move(p)).first->second;
}

bool cos_combination_is_zero(const std::vector<CosTerm>& terms) {
  if (terms.empty()) return true;
  mpz_class L = 1;
  std::vector<std::pair<mpq_class, mpq_class>> normed;  // (coeff, angle in [0,2))
  normed.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    mpq_class a = Angle::normalized(t.angle_pi);
    L = lcm_z(L, a.get_den());
    normed.emplace_back(t.coeff, a);
  }
  if (normed.empty()) return true;
  if (L > static_cast<long>(kMaxOrder / 2))
    fail("AngleTooFine", "angle denominators too large for the exact kernel (lcm > 4096)");
  unsigned long M = 2 * L.get_ui();

  // value = sum c_i (zeta^{p_i} + zeta^{-p_i})/2 with zeta = e^{i pi / L}
  std::vector<mpq_class> P(M, mpq_class(0));
  for (const auto& [c, a] : normed) {
    mpz_class pz = a.get_num() * (L / a.get_den());  // a*L, integer in [0, M)
    unsigned long p = pz.get_ui() % M;
    P[p] += c / 2;
    P[(M - p) % M] += c / 2;
  }

  mpz_class den = 1;
  for (const auto& q : P) den = lcm_z(den, q.get_den());
  ZPoly Z(M);
  for (unsigned long i = 0; i < M; ++i) {
    mpq_class scaled = P[i] * den;
    Z[i] = scaled.get_num();  // den divides out exactly
  }

  const ZPoly& phi = cyclotomic(M);
  std::size_t degF = phi.size() - 1;
  for (std::size_t i = M; i-- > degF;) {
    if (Z[i] == 0) continue;
    mpz_class c = Z[i];
    for (std::size_t j = 0; j < phi.size(); ++j) Z[i - degF + j] -= c * phi[j];
  }
  for (std::size_t i = 0; i < degF && i < Z.size(); ++i)
    if (Z[i] != 0) return false;
  return true;
}

int sign_of_cos_combination(const std::vector<CosTerm>& terms) {
  if (cos_combination_is_zero(terms)) return 0;

  mpq_class csum = 1;
  for (const auto& t : terms) csum += rat_abs(t.coeff);

  for (long prec = 128; prec <= (1 << 16); prec *= 2) {
    mpfr_t pi, acc, ang, term, coeff, bound;
    mpfr_inits2(prec, pi, acc, ang, term, coeff, bound, nullptr);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_ui(acc, 0, MPFR_RNDN);
    for (const auto& t : terms) {
      mpfr_set_q(ang, Angle::normalized(t.angle_pi).get_mpq_t(), MPFR_RNDN);
      mpfr_mul(ang, ang, pi, MPFR_RNDN);
      mpfr_cos(term, ang, MPFR_RNDN);
      mpfr_set_q(coeff, t.coeff.get_mpq_t(), MPFR_RNDN);
      mpfr_mul(term, term, coeff, MPFR_RNDN);
      mpfr_add(acc, acc, term, MPFR_RNDN);
    }
    // conservative absolute error: (1 + sum |c_i|) * 2^(32 - prec)
    mpfr_set_q(bound, csum.get_mpq_t(), MPFR_RNDN);
    mpfr_mul_2si(bound, bound, 32 - prec, MPFR_RNDN);
    int separated = mpfr_cmpabs(acc, bound) > 0;
    int s = mpfr_sgn(acc);
    mpfr_clears(pi, acc, ang, term, coeff, bound, nullptr);
    if (separated) return s > 0 ? 1 : -1;
  }
  fail("Internal", "sign separation exceeded the precision cap");
}

}  // namespace stokes
