#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "divisor.hpp"
#include "errors.hpp"

using namespace stokes;

namespace {

ExponentialFactor one_over_t() { return ExponentialFactor::polar(1, {make_rat(1), Angle()}); }

// rank r, S1: y = t (q=1, mu0=1), St1 elsewhere; both full vanishing cycles
DivisorConfig running_example(long r) {
  DivisorConfig cfg;
  cfg.rank = r;
  cfg.components.push_back({ComponentKind::AtInfinity, one_over_t(), r, "S1"});
  cfg.components.push_back({ComponentKind::Elsewhere, one_over_t(), r, "St1"});
  return cfg;
}

Angle ang(long n, long d) { return Angle(make_rat(n, d)); }

}  // namespace

TEST_CASE("validate accepts the running example and the empty config") {
  CHECK_NOTHROW(validate(running_example(2)));
  DivisorConfig empty;
  empty.rank = 1;
  CHECK_NOTHROW(validate(empty));
}

TEST_CASE("validate rejects duplicate (q, mu0) at infinity") {
  DivisorConfig cfg;
  cfg.rank = 1;
  auto f = ExponentialFactor::polar(2, {make_rat(1), Angle()});
  cfg.components.push_back({ComponentKind::AtInfinity, f, 1, "S1"});
  cfg.components.push_back({ComponentKind::AtInfinity, f, 1, "S2"});
  try {
    validate(cfg);
    FAIL("expected AssumptionViolation");
  } catch (const StokesError& e) {
    CHECK(e.kind() == "AssumptionViolation");
    CHECK(std::string(e.what()).find("0") != std::string::npos);
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
}

TEST_CASE("validate rejects duplicate elsewhere labels") {
  DivisorConfig cfg;
  cfg.rank = 1;
  cfg.components.push_back({ComponentKind::Elsewhere, one_over_t(), 1, "St"});
  cfg.components.push_back({ComponentKind::Elsewhere, one_over_t(), 2, "St"});
  CHECK_THROWS_AS(validate(cfg), StokesError);
}

TEST_CASE("formal decomposition of the running example") {
  for (long r : {1L, 2L, 3L}) {
    auto dec = formal_decomposition(running_example(r));
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first.is_zero());
    CHECK(dec[0].second == r);
    CHECK(dec[1].first == one_over_t());
    CHECK(dec[1].second == r);
  }
}

TEST_CASE("formal decomposition keeps only the untwisted entry without poles") {
  DivisorConfig cfg;
  cfg.rank = 3;
  cfg.components.push_back({ComponentKind::Elsewhere, one_over_t(), 1, "A"});
  cfg.components.push_back({ComponentKind::Elsewhere, one_over_t(), 2, "B"});
  auto dec = formal_decomposition(cfg);
  REQUIRE(dec.size() == 1);
  CHECK(dec[0].first.is_zero());
  CHECK(dec[0].second == 3);
}

TEST_CASE("formal decomposition with a higher pole") {
  DivisorConfig cfg;
  cfg.rank = 2;
  auto f = ExponentialFactor::polar(2, {make_rat(3), Angle()});
  cfg.components.push_back({ComponentKind::AtInfinity, f, 2, "S1"});
  cfg.components.push_back({ComponentKind::Elsewhere, one_over_t(), 1, "St1"});
  auto dec = formal_decomposition(cfg);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].first.is_zero());
  CHECK(dec[0].second == 1);
  CHECK(dec[1].first.str() == "3·t^-2");
  CHECK(dec[1].second == 2);
}

TEST_CASE("stalk dimensions of the running example at rank 2") {
  auto cfg = running_example(2);
  CHECK(stalk_dim(cfg, ExponentialFactor::zero(), Angle()) == 2);
  CHECK(stalk_dim(cfg, one_over_t(), Angle()) == 4);
  CHECK(stalk_dim(cfg, one_over_t(), ang(1, 1)) == 2);
  CHECK(stalk_dim(cfg, ExponentialFactor::zero(), ang(1, 1)) == 4);
  CHECK_THROWS_AS(stalk_dim(cfg, one_over_t(), ang(1, 2)), StokesError);
}

TEST_CASE("total dimension") {
  CHECK(total_dim(running_example(2)) == 4);
  DivisorConfig empty;
  empty.rank = 1;
  CHECK(total_dim(empty) == 0);
  DivisorConfig cfg;
  cfg.rank = 1;
  cfg.components.push_back({ComponentKind::Elsewhere, one_over_t(), 1, "A"});
  cfg.components.push_back({ComponentKind::Elsewhere, one_over_t(), 2, "B"});
  cfg.components.push_back({ComponentKind::AtInfinity, one_over_t(), 3, "S1"});
  CHECK(total_dim(cfg) == 6);
}

namespace {

DivisorConfig random_config(std::mt19937_64& rng) {
  DivisorConfig cfg;
  cfg.rank = 1 + static_cast<long>(rng() % 3);
  int at = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < at; ++i) {
    long q = 1 + static_cast<long>(rng() % 3);
    PolarCoefficient mu{make_rat(1 + (long)(rng() % 4)), Angle(make_rat((long)(rng() % 4), 2))};
    auto f = ExponentialFactor::polar(q, mu);
    bool dup = false;
    for (const auto& c : cfg.components)
      if (c.factor == f) dup = true;
    if (dup) continue;
    cfg.components.push_back(
        {ComponentKind::AtInfinity, f, (long)(rng() % 4), "S" + std::to_string(i)});
  }
  int el = static_cast<int>(rng() % 3);
  for (int j = 0; j < el; ++j)
    cfg.components.push_back(
        {ComponentKind::Elsewhere, one_over_t(), (long)(rng() % 3), "St" + std::to_string(j)});
  return cfg;
}

// graded dimension of psi-prime inside the config
long graded_dim(const DivisorConfig& cfg, const ExponentialFactor& psi) {
  long d = 0;
  for (const auto& c : cfg.components) {
    if (c.kind == ComponentKind::AtInfinity && c.factor == psi) d += c.phi_dim;
    if (c.kind == ComponentKind::Elsewhere && psi.is_zero()) d += c.phi_dim;
  }
  return d;
}

}  // namespace

TEST_CASE("filtration properties over a sampling grid") {
  std::mt19937_64 rng(20260814);
  for (int trial = 0; trial < 25; ++trial) {
    auto cfg = random_config(rng);
    auto factors = factor_set(cfg);
    for (long j = 0; j < 24; ++j) {
      Angle th(make_rat(2 * j + 1, 24));
      std::vector<std::pair<ExponentialFactor, long>> dims;
      bool stokes_hit = false;
      try {
        for (const auto& psi : factors) dims.emplace_back(psi, stalk_dim(cfg, psi, th));
      } catch (const StokesError&) {
        stokes_hit = true;
      }
      if (stokes_hit) continue;

      // monotone along the order, exhaustive at the top
      auto ordered = total_order(factors, th);
      long prev = -1;
      for (const auto& psi : ordered) {
        long d = stalk_dim(cfg, psi, th);
        CHECK(d >= prev);
        prev = d;
      }
      CHECK(prev == total_dim(cfg));

      // sum rule: stalk = sum of graded dims over psi' <= psi
      for (const auto& [psi, d] : dims) {
        long sum = 0;
        for (const auto& other : factors)
          if (is_less_eq(compare_at(other, psi, th))) sum += graded_dim(cfg, other);
        CHECK(d == sum);
      }
    }
  }
}
