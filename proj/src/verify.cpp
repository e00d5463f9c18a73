#include "verify.hpp"

#include <functional>
#include <random>

#include "cech.hpp"
#include "divisor.hpp"
#include "errors.hpp"
#include "example.hpp"
#include "fiber.hpp"
#include "resolution.hpp"

namespace stokes {

namespace {

DivisorConfig random_config(std::mt19937_64& rng) {
  DivisorConfig cfg;
  cfg.rank = 1 + static_cast<long>(rng() % 3);
  int at = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < at; ++i) {
    long q = 1 + static_cast<long>(rng() % 3);
    PolarCoefficient mu{make_rat(1 + (long)(rng() % 4)),
                        Angle(make_rat((long)(rng() % 4), 2))};
    auto f = ExponentialFactor::polar(q, mu);
    bool dup = false;
    for (const auto& c : cfg.components)
      if (c.factor == f) dup = true;
    if (dup) continue;
    cfg.components.push_back({ComponentKind::AtInfinity, f,
                              (long)(rng() % 4), "S" + std::to_string(i)});
  }
  int el = static_cast<int>(rng() % 3);
  for (int j = 0; j < el; ++j)
    cfg.components.push_back(
        {ComponentKind::Elsewhere,
         ExponentialFactor::polar(1, {mpq_class(1), Angle()}),
         (long)(rng() % 3), "St" + std::to_string(j)});
  return cfg;
}

// Off-grid directions (2j+1)/(2*count) stay clear of the axis-aligned
// Stokes directions of integer-q factors only when the denominator is
// generic; failures surface as StokesDirectionHit and are skipped.
Angle grid_angle(long j, long count) { return Angle(make_rat(2 * j + 1, count)); }

struct Runner {
  std::vector<CheckResult> results;

  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    try {
      r.detail = body();
      r.ok = r.detail.empty();
    } catch (const StokesError& e) {
      r.ok = false;
      r.detail = std::string("unexpected error [") + e.kind() + "] " + e.what();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("unexpected exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
};

}  // namespace

std::vector<CheckResult> run_checks(unsigned long seed, int trials) {
  Runner run;
  if (trials < 1) trials = 1;

  run.run("order-antisymmetric", [&]() -> std::string {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
      auto cfg = random_config(rng);
      auto fs = factor_set(cfg);
      for (long j = 0; j < 24; ++j) {
        Angle th = grid_angle(j, 24);
        for (const auto& a : fs)
          for (const auto& b : fs) {
            ComparisonResult ab, ba;
            try {
              ab = compare_at(a, b, th);
              ba = compare_at(b, a, th);
            } catch (const StokesError&) {
              continue;
            }
            const bool mirrored =
                (ab == ComparisonResult::Equal && ba == ComparisonResult::Equal) ||
                (ab == ComparisonResult::LessEq && ba == ComparisonResult::GreaterEq) ||
                (ab == ComparisonResult::GreaterEq && ba == ComparisonResult::LessEq) ||
                (ab == ComparisonResult::Stokes && ba == ComparisonResult::Stokes);
            if (!mirrored)
              return "comparison of " + a.str() + " and " + b.str() + " at " +
                     th.str() + " is not antisymmetric";
          }
      }
    }
    return "";
  });

  run.run("order-sorts-totally", [&]() -> std::string {
    std::mt19937_64 rng(seed + 1);
    for (int t = 0; t < trials; ++t) {
      auto cfg = random_config(rng);
      auto fs = factor_set(cfg);
      for (long j = 0; j < 24; ++j) {
        Angle th = grid_angle(j, 24);
        std::vector<ExponentialFactor> sorted;
        try {
          sorted = total_order(fs, th);
        } catch (const StokesError&) {
          continue;
        }
        if (sorted.size() != fs.size()) return "total order dropped a factor";
        for (std::size_t i = 0; i < sorted.size(); ++i)
          for (std::size_t k = i + 1; k < sorted.size(); ++k)
            if (!is_less_eq(compare_at(sorted[i], sorted[k], th)))
              return "factors " + sorted[i].str() + ", " + sorted[k].str() +
                     " out of order at " + th.str();
      }
    }
    return "";
  });

  run.run("stokes-directions-on-boundary", [&]() -> std::string {
    std::mt19937_64 rng(seed + 2);
    for (int t = 0; t < trials; ++t) {
      auto cfg = random_config(rng);
      auto fs = factor_set(cfg);
      for (const auto& a : fs)
        for (const auto& b : fs) {
          if (a == b) continue;
          std::vector<Angle> dirs;
          try {
            dirs = stokes_directions(a, b);
          } catch (const StokesError&) {
            continue;  // equal factors
          }
          const long q = std::max(a.q(), b.q());
          if ((long)dirs.size() != 2 * q)
            return "pair " + a.str() + ", " + b.str() + " has " +
                   std::to_string(dirs.size()) + " directions, expected " +
                   std::to_string(2 * q);
          for (const auto& d : dirs)
            if (compare_at(a, b, d) != ComparisonResult::Stokes)
              return "direction " + d.str() + " is not Stokes for " + a.str() +
                     ", " + b.str();
        }
    }
    return "";
  });

  run.run("boundary-arc-has-length-pi", [&]() -> std::string {
    std::mt19937_64 rng(seed + 3);
    for (int t = 0; t < trials * 8; ++t) {
      long n = 1 + static_cast<long>(rng() % 5);
      Angle th(make_rat((long)(rng() % 97), 1 + (long)(rng() % 7)));
      auto arc = boundary_arc(n, th);
      Angle len(arc.hi.pi_units() - arc.lo.pi_units());
      if (len != Angle(mpq_class(1)))
        return "arc " + arc.str() + " does not span half the circle";
    }
    return "";
  });

  run.run("fiber-dimension-matches-stalks", [&]() -> std::string {
    std::mt19937_64 rng(seed + 4);
    for (int t = 0; t < trials; ++t) {
      auto cfg = random_config(rng);
      for (const auto& psi : factor_set(cfg)) {
        for (long j = 0; j < 24; ++j) {
          Angle th = grid_angle(j, 24);
          long lhs = 0, rhs = 0;
          bool lt = false, rt = false;
          try {
            lhs = h1c_dimension(b_set(cfg, psi, th));
          } catch (const StokesError&) {
            lt = true;
          }
          try {
            rhs = stalk_dim(cfg, psi, th);
          } catch (const StokesError&) {
            rt = true;
          }
          if (lt != rt)
            return "only one side rejected " + psi.str() + " at " + th.str();
          if (!lt && lhs != rhs)
            return "fiber dimension " + std::to_string(lhs) + " != stalk " +
                   std::to_string(rhs) + " for " + psi.str() + " at " + th.str();
        }
      }
    }
    return "";
  });

  run.run("resolution-is-good-everywhere", [&]() -> std::string {
    std::mt19937_64 rng(seed + 5);
    for (int t = 0; t < trials; ++t) {
      auto cfg = random_config(rng);
      for (const auto& psi : factor_set(cfg)) {
        Resolution res;
        try {
          res = resolve(psi, cfg);
        } catch (const StokesError& e) {
          if (e.kind() == "BadInput" || e.kind() == "UnsupportedTwist") continue;
          throw;
        }
        for (std::size_t i = 0; i < res.charts.size(); ++i)
          if (res.chart_forms[i].kind == GoodForm::Kind::Bad)
            return "chart " + res.charts[i].label + " of " + psi.str() +
                   " is not in good form";
        if (res.intersections.empty() && max_pole_order(cfg) > 0)
          return "resolution of " + psi.str() + " lost the pole components";
      }
    }
    return "";
  });

  run.run("reduction-idempotent-on-example", [&]() -> std::string {
    const ExampleBundle b = build_bundle();
    for (const auto* asg : {&b.tilde_pi, &b.base_pi}) {
      for (const auto& img : refinement_images(b.fine_pi, *asg)) {
        const auto red = reduce_mod_image(b.fine_pi, img);
        if (reduce_mod_image(b.fine_pi, red) != red)
          return "reduction is not idempotent";
      }
    }
    return "";
  });

  run.run("example-backends-agree", [&]() -> std::string {
    const ExampleBundle b = build_bundle();
    const RingMat n_pi = n_pi_symbolic(b);
    const RingMat n_zero = n_zero_symbolic(b);
    std::mt19937_64 rng(seed + 6);
    for (int t = 0; t < trials; ++t) {
      const std::size_t rank = 1 + rng() % 3;
      const MonodromyRep rep = MonodromyRep::random(rank, rng());
      if (n_pi_matrix(b, rep) != rep.evaluate(n_pi))
        return "n_pi disagrees at rank " + std::to_string(rank);
      if (n_zero_matrix(b, rep) != rep.evaluate(n_zero))
        return "n_zero disagrees at rank " + std::to_string(rank);
    }
    return "";
  });

  run.run("stokes-datum-valid", [&]() -> std::string {
    std::mt19937_64 rng(seed + 7);
    for (int t = 0; t < trials; ++t) {
      const MonodromyRep rep = MonodromyRep::random(1 + rng() % 3, rng());
      const StokesDatum sd = stokes_data(rep);
      const auto violations = validate_stokes_datum(sd, rep);
      if (!violations.empty()) return violations.front();
      if (!total_monodromy_matrix(sd).inverse())
        return "total monodromy is singular";
    }
    return "";
  });

  return run.results;
}

}  // namespace stokes
