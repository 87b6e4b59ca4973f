#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "support.hpp"
#include "ves/asymptotics.hpp"
#include "ves/errors.hpp"
#include "ves/eval.hpp"
#include "ves/grid.hpp"
#include "ves/params.hpp"
#include "ves/verify.hpp"

using ves::ProbeConfig;
using ves::RawParams;
using ves::ValidatedParams;

TEST_CASE("finite differences recover the closed-form derivatives") {
  const std::vector<double> ks =
      ves::grid_points({0.1, 10.0, 33, ves::Spacing::Log});
  for (const int id : {1, 2}) {
    const ValidatedParams p = ves::benchmark_case(id);
    const auto f = [&p](double k) { return ves::eval_f(p, k); };
    for (const double k : ks) {
      CAPTURE(id);
      CAPTURE(k);
      const double fd1 = ves::finite_diff_first(f, k);
      const double fd2 = ves::finite_diff_second(f, k);
      CHECK(std::fabs(fd1 - ves::eval_f_prime(p, k)) <=
            1e-7 * std::fabs(ves::eval_f_prime(p, k)));
      CHECK(std::fabs(fd2 - ves::eval_f_double_prime(p, k)) <=
            1e-4 * std::fabs(ves::eval_f_double_prime(p, k)));
    }
  }

  ves::testing::PhiSampler sampler(5280);
  for (int draw = 0; draw < 100; ++draw) {
    const ValidatedParams p = sampler.next();
    const auto f = [&p](double k) { return ves::eval_f(p, k); };
    for (const double k : {0.1, 0.7, 1.0, 3.0, 10.0}) {
      CAPTURE(draw);
      CAPTURE(k);
      CHECK(std::fabs(ves::finite_diff_first(f, k) - ves::eval_f_prime(p, k)) <=
            1e-7 * std::fabs(ves::eval_f_prime(p, k)));
      CHECK(std::fabs(ves::finite_diff_second(f, k) -
                      ves::eval_f_double_prime(p, k)) <=
            1e-4 * std::fabs(ves::eval_f_double_prime(p, k)));
    }
  }
}

TEST_CASE("finite difference error handling") {
  CHECK_THROWS_AS((void)ves::finite_diff_first([](double k) { return k; }, 0.0),
                  ves::DomainError);
  CHECK_THROWS_AS((void)ves::finite_diff_second([](double k) { return k; }, -1.0),
                  ves::DomainError);
  const auto bad = [](double) { return std::numeric_limits<double>::quiet_NaN(); };
  CHECK_THROWS_AS((void)ves::finite_diff_first(bad, 1.0), ves::NumericError);
  CHECK_THROWS_AS((void)ves::finite_diff_second(bad, 1.0), ves::NumericError);
}

TEST_CASE("benchmark cases pass every probe at defaults") {
  for (const int id : {1, 2}) {
    const ValidatedParams p = ves::benchmark_case(id);
    const ves::InadaReport rep = ves::check_inada(p);
    CAPTURE(id);
    CHECK(rep.f_nonneg_and_zero_at_origin.pass);
    CHECK(rep.f_increasing.pass);
    CHECK(rep.f_prime_diverges_at_zero.pass);
    CHECK(rep.f_prime_vanishes_at_infinity.pass);
    CHECK(rep.f_concave.pass);
    CHECK(rep.f_diverges_at_infinity.pass);
    CHECK(rep.all_pass());

    // share limits and slope estimates sit on the envelope exponents
    const ves::AsymptoticSummary s = ves::asymptotic_summary(p);
    CHECK(std::fabs(rep.share_limit_zero - s.alpha_z) < 1e-6);
    CHECK(std::fabs(rep.share_limit_infinity - s.beta_z) < 1e-6);
    CHECK(std::fabs(rep.slope_estimate_zero - s.alpha_z) < 1e-5);
    CHECK(std::fabs(rep.slope_estimate_infinity - s.beta_z) < 1e-5);

    // default grid: 16 decades at 4 points per decade
    CHECK(rep.grid_description.find("65 points") != std::string::npos);
    CHECK(rep.f_prime_diverges_at_zero.witness_k == 1e-8);
    CHECK(rep.f_prime_vanishes_at_infinity.witness_k == 1e8);
  }
}

TEST_CASE("sampled feasible tuples pass on psi-adaptive probe ranges") {
  // The probes must reach far enough out for the limit trends to express;
  // the required reach scales like 1/|psi| decades, so tiny |psi| draws are
  // resampled (they would need abscissae beyond double range).
  ves::testing::PhiSampler sampler(9090);
  int tested = 0;
  while (tested < 100) {
    const ValidatedParams p = sampler.next();
    if (std::fabs(p.psi()) < 0.1) continue;
    ++tested;
    const int e = std::max(8, static_cast<int>(std::ceil(10.0 / std::fabs(p.psi()))));
    ProbeConfig cfg;
    cfg.k_min = std::pow(10.0, -e);
    cfg.k_max = std::pow(10.0, e);
    const ves::InadaReport rep = ves::check_inada(p, cfg);
    CAPTURE(p.psi());
    CAPTURE(p.theta());
    CHECK(rep.all_pass());
    const ves::AsymptoticSummary s = ves::asymptotic_summary(p);
    CHECK(std::fabs(rep.share_limit_zero - s.alpha_z) < 1e-6);
    CHECK(std::fabs(rep.share_limit_infinity - s.beta_z) < 1e-6);
  }
}

TEST_CASE("diagnostics mode flags a tuple just outside the region") {
  // theta + omega*psi = 1.05 > 1: output keeps rising ever faster, so
  // concavity and the vanishing-derivative limit must fail while the
  // small-k conditions still hold.
  RawParams p{1.05, 0.2, 0.8, 0.8, 0.9, 0.25 / 0.9};
  CHECK_FALSE(ves::validate(p).overall);
  const ves::InadaReport rep = ves::check_inada_diagnostic(p);
  CHECK_FALSE(rep.all_pass());
  CHECK_FALSE(rep.f_concave.pass);
  CHECK_FALSE(rep.f_prime_vanishes_at_infinity.pass);
  CHECK(rep.f_nonneg_and_zero_at_origin.pass);
  CHECK(rep.f_increasing.pass);
  CHECK(rep.f_prime_diverges_at_zero.pass);
  CHECK(rep.f_diverges_at_infinity.pass);
  // the concavity witness carries the offending probe
  CHECK(rep.f_concave.measured > 0.0);
  CHECK(rep.share_limit_infinity > 1.0);
}

TEST_CASE("diagnostics mode flags a negative scale") {
  RawParams p{-1.0, 0.2, 0.8, 0.8, 0.9, 0.2};
  const ves::InadaReport rep = ves::check_inada_diagnostic(p);
  CHECK_FALSE(rep.f_nonneg_and_zero_at_origin.pass);
  CHECK(rep.f_nonneg_and_zero_at_origin.measured < 0.0);
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("a constant derivative is not certified as divergent or vanishing") {
  // theta = 1 with a vanishing gain makes f(k) ~ A*k, so f' ~ A at both
  // ends.  The endpoint trend is numerical noise, but the endpoint
  // criterion (threshold or slope margin) must still reject both limits.
  RawParams p{1.0, 0.5, 0.5, 1.0, 0.5, 1e-12};
  const ves::InadaReport rep = ves::check_inada_diagnostic(p);
  CHECK_FALSE(rep.f_prime_diverges_at_zero.pass);
  CHECK_FALSE(rep.f_prime_vanishes_at_infinity.pass);
}

TEST_CASE("probe grid configuration") {
  const ValidatedParams p = ves::benchmark_case(1);
  ProbeConfig cfg;
  cfg.k_min = 1e-4;
  cfg.k_max = 1e4;
  cfg.points_per_decade = 2;
  const ves::InadaReport rep = ves::check_inada(p, cfg);
  CHECK(rep.grid_description.find("17 points") != std::string::npos);
  CHECK(rep.all_pass());

  ProbeConfig bad = cfg;
  bad.k_min = 0.0;
  CHECK_THROWS_AS((void)ves::check_inada(p, bad), ves::DomainError);
  bad = cfg;
  bad.k_max = bad.k_min;
  CHECK_THROWS_AS((void)ves::check_inada(p, bad), ves::DomainError);
  bad = cfg;
  bad.points_per_decade = 0;
  CHECK_THROWS_AS((void)ves::check_inada(p, bad), ves::DomainError);
  bad = cfg;
  bad.divergence_threshold = -1.0;
  CHECK_THROWS_AS((void)ves::check_inada(p, bad), ves::DomainError);
}

TEST_CASE("overflow inside the probe sweep is reported with the abscissa") {
  const ValidatedParams big =
      ValidatedParams::validated({1e7, 0.5, 0.5, 0.8, 0.9, 0.2});
  ProbeConfig cfg;
  cfg.k_min = 1e-8;
  cfg.k_max = 1e308;
  CHECK_THROWS_AS((void)ves::check_inada(big, cfg), ves::NumericError);
}
