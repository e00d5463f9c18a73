// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line; the exit code is the number of failures.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "cech.hpp"
#include "divisor.hpp"
#include "errors.hpp"
#include "example.hpp"
#include "fiber.hpp"
#include "json_io.hpp"
#include "resolution.hpp"

using namespace stokes;

namespace {

ExponentialFactor one_over_t() {
  return ExponentialFactor::polar(1, {mpq_class(1), Angle()});
}

std::string a1_matrix_reproduction() {
  const StokesDatum sd = stokes_data(MonodromyRep::symbolic());
  if (sd.n_pi.str() != "[[-1, 1 - S·T^-1],[0, -S·T^-1]]")
    return "n_pi = " + sd.n_pi.str();
  if (sd.n_zero.str() != "[[-T·S^-1, 0],[1 - T·S^-1, -1]]")
    return "n_zero = " + sd.n_zero.str();
  if (!(sd.s01 == sd.n_pi)) return "s01 differs from n_pi";
  if (sd.s10.str() != "[[-U·T·S^-1, 0],[U - U·T·S^-1, -U]]")
    return "s10 = " + sd.s10.str();
  return "";
}

std::string a2_backend_agreement() {
  const ExampleBundle b = build_bundle();
  const RingMat n_pi = n_pi_symbolic(b);
  const RingMat n_zero = n_zero_symbolic(b);
  for (std::size_t rank = 1; rank <= 3; ++rank) {
    for (unsigned long seed = 0; seed < 25; ++seed) {
      const MonodromyRep rep = MonodromyRep::random(rank, 31 * seed + rank);
      if (n_pi_matrix(b, rep) != rep.evaluate(n_pi))
        return "n_pi mismatch at rank " + std::to_string(rank) + ", seed " +
               std::to_string(seed);
      if (n_zero_matrix(b, rep) != rep.evaluate(n_zero))
        return "n_zero mismatch at rank " + std::to_string(rank) + ", seed " +
               std::to_string(seed);
    }
  }
  return "";
}

std::string a3_reduction_identities() {
  const ExampleBundle b = build_bundle();
  const auto imgs = refinement_images(b.fine_pi, b.tilde_pi);
  const auto r1 = reduce_mod_image(b.fine_pi, imgs[0]);
  const auto r2 = reduce_mod_image(b.fine_pi, imgs[1]);
  const RingElement sti = RingElement::word(GroupWord::s() * GroupWord::t().inverse());
  for (std::size_t c = 0; c < 22; ++c) {
    if (c == 7 || c == 21) continue;
    if (!r1[c].is_zero() || !r2[c].is_zero())
      return "residue off the basis cells at copy " + std::to_string(c);
  }
  if (r1[7] != RingElement::scalar(-1) || r1[21] != RingElement::one() - sti)
    return "first comparison cell reduces to (" + r1[7].str() + ", " +
           r1[21].str() + ")";
  if (!r2[7].is_zero() || r2[21] != -sti)
    return "second comparison cell reduces to (" + r2[7].str() + ", " +
           r2[21].str() + ")";
  return "";
}

std::string a4_dimension_consistency() {
  for (long r = 1; r <= 3; ++r) {
    const DivisorConfig cfg = default_config(r);
    for (const auto& psi : factor_set(cfg)) {
      for (long j = 0; j < 24; ++j) {
        const Angle th(make_rat(2 * j + 1, 24));
        const long fiber = h1c_dimension(b_set(cfg, psi, th));
        const long stalk = stalk_dim(cfg, psi, th);
        if (fiber != stalk)
          return "r=" + std::to_string(r) + " psi=" + psi.str() + " theta=" +
                 th.str() + ": fiber " + std::to_string(fiber) + " != stalk " +
                 std::to_string(stalk);
      }
    }
  }
  const DivisorConfig cfg2 = default_config(2);
  const Angle zero_dir, pi_dir(mpq_class(1));
  if (stalk_dim(cfg2, ExponentialFactor::zero(), zero_dir) != 2 ||
      stalk_dim(cfg2, one_over_t(), zero_dir) != 4)
    return "dims at theta=0 are not (2, 4)";
  if (stalk_dim(cfg2, ExponentialFactor::zero(), pi_dir) != 4 ||
      stalk_dim(cfg2, one_over_t(), pi_dir) != 2)
    return "dims at theta=pi are not (4, 2)";
  return "";
}

std::string a5_datum_validation() {
  const StokesDatum sym = stokes_data(MonodromyRep::symbolic());
  if (!validate_stokes_datum(sym, MonodromyRep::symbolic()).empty())
    return "symbolic datum reported violations";
  for (std::size_t rank = 1; rank <= 3; ++rank) {
    for (unsigned long seed = 0; seed < 25; ++seed) {
      const MonodromyRep rep = MonodromyRep::random(rank, 31 * seed + rank);
      if (!validate_stokes_datum(stokes_data(rep), rep).empty())
        return "datum invalid at rank " + std::to_string(rank) + ", seed " +
               std::to_string(seed);
    }
  }
  StokesDatum broken = sym;
  broken.s01.at(1, 0) = RingElement::one();
  if (validate_stokes_datum(broken, MonodromyRep::symbolic()).empty())
    return "forbidden lower block in s01 not detected";
  StokesDatum broken2 = sym;
  broken2.s10.at(0, 1) = RingElement::word(GroupWord::u());
  if (validate_stokes_datum(broken2, MonodromyRep::symbolic()).empty())
    return "forbidden upper block in s10 not detected";
  return "";
}

std::string a6_resolution_totality() {
  for (long n = 1; n <= 5; ++n) {
    DivisorConfig cfg;
    cfg.rank = 1;
    cfg.components.push_back({ComponentKind::AtInfinity,
                              ExponentialFactor::polar(n, {mpq_class(1), Angle()}),
                              1, "S1"});
    const Resolution res = resolve(ExponentialFactor::zero(), cfg);
    if ((long)res.charts.size() != n + 1)
      return "untwisted tower n=" + std::to_string(n) + " has " +
             std::to_string(res.charts.size()) + " charts";
    for (long k = 1; k <= n; ++k) {
      const auto& e = res.chart_exprs[k - 1];
      if (!e.factors.empty() || !(e.coeff == GaussianRational{1, 0}) ||
          e.x_exp != -(k - 1) || e.y_exp != -k)
        return "chart " + std::to_string(k) + " pullback is " +
               e.str() + ", expected u^-" + std::to_string(k - 1) + "·v^-" +
               std::to_string(k);
    }
    for (std::size_t i = 0; i < res.charts.size(); ++i)
      if (res.chart_forms[i].kind == GoodForm::Kind::Bad)
        return "bad form in untwisted chart " + res.charts[i].label;
  }
  // twisted example plus a second pole component: P_i = (0, 1/mu_i)
  DivisorConfig cfg = default_config(2);
  cfg.components.push_back({ComponentKind::AtInfinity,
                            ExponentialFactor::polar(1, {mpq_class(2), Angle()}),
                            1, "S2"});
  const Resolution res = resolve(one_over_t(), cfg);
  for (std::size_t i = 0; i < res.charts.size(); ++i)
    if (res.chart_forms[i].kind == GoodForm::Kind::Bad)
      return "bad form in twisted chart " + res.charts[i].label;
  bool matched = false, other = false;
  for (const auto& p : res.intersections) {
    if (p.component == 0) {
      matched = p.chart_label == "~1'" && p.v0 == GaussianRational{0, 0};
    }
    if (p.component == 2) {
      other = p.chart_label == "~1" && p.v0 == GaussianRational{make_rat(1, 2), 0};
    }
  }
  if (!matched) return "matching component does not land at the origin";
  if (!other) return "second pole component is not at (0, 1/2)";
  return "";
}

std::string a7_stokes_directions() {
  const auto dirs = stokes_directions(ExponentialFactor::zero(), one_over_t());
  if (dirs.size() != 2 || dirs[0] != quarter_pi(1) || dirs[1] != quarter_pi(3)) {
    std::string got;
    for (const auto& d : dirs) got += d.str() + " ";
    return "directions of (0, 1/t): " + got;
  }
  std::mt19937_64 rng(20260814);
  int accepted = 0;
  while (accepted < 10) {
    std::vector<ExponentialFactor> fs = {ExponentialFactor::zero()};
    const int extra = 2 + int(rng() % 3);
    for (int i = 0; i < extra; ++i)
      fs.push_back(ExponentialFactor::polar(
          1, {make_rat(i + 1 + (long)(rng() % 3), 1 + (long)(rng() % 2)),
              Angle(make_rat((long)(rng() % 4), 2))}));
    bool dup = false;
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j)
        if (fs[i] == fs[j]) dup = true;
    if (dup) continue;
    const Angle theta0(make_rat((long)(rng() % 360), 180));
    std::vector<ExponentialFactor> fwd, bwd;
    try {
      fwd = total_order(fs, theta0);
      bwd = total_order(fs, Angle(theta0.pi_units() + 1));
    } catch (const StokesError&) {
      continue;  // resample away from Stokes directions
    }
    ++accepted;
    for (std::size_t i = 0; i < fwd.size(); ++i)
      if (fwd[i] != bwd[fwd.size() - 1 - i])
        return "order at " + theta0.str() + " is not reversed half a turn later";
  }
  return "";
}

std::string a8_formal_decomposition() {
  for (long r = 1; r <= 3; ++r) {
    const auto dec = formal_decomposition(default_config(r));
    if (dec.size() != 2) return "decomposition has " + std::to_string(dec.size()) + " parts";
    if (!(dec[0].first == ExponentialFactor::zero()) || dec[0].second != r)
      return "untwisted part is (" + dec[0].first.str() + ", " +
             std::to_string(dec[0].second) + ")";
    if (!(dec[1].first == one_over_t()) || dec[1].second != r)
      return "twisted part is (" + dec[1].first.str() + ", " +
             std::to_string(dec[1].second) + ")";
  }
  return "";
}

int failures = 0;

void report(const char* id, const std::function<std::string()>& body) {
  std::string detail;
  try {
    detail = body();
  } catch (const StokesError& e) {
    detail = std::string("unexpected error [") + e.kind() + "] " + e.what();
  } catch (const std::exception& e) {
    detail = std::string("unexpected exception: ") + e.what();
  }
  if (detail.empty()) {
    std::cout << id << " PASS" << std::endl;
  } else {
    std::cout << id << " FAIL: " << detail << std::endl;
    ++failures;
  }
}

}  // namespace

int main() {
  report("A1", a1_matrix_reproduction);
  report("A2", a2_backend_agreement);
  report("A3", a3_reduction_identities);
  report("A4", a4_dimension_consistency);
  report("A5", a5_datum_validation);
  report("A6", a6_resolution_totality);
  report("A7", a7_stokes_directions);
  report("A8", a8_formal_decomposition);
  return failures;
}
