#include "ves/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "ves/errors.hpp"
#include "ves/eval.hpp"
#include "ves/parallel_for.hpp"

namespace ves {
namespace {

// Endpoint log-log slopes with magnitude at or below this are treated as
// flat.  Feasible tuples produce limit exponents well above it, so the
// margin only screens out pseudo-trends of functions approaching a finite,
// nonzero limit.
constexpr double kSlopeMargin = 1e-4;

std::vector<double> probe_grid(const ProbeConfig& cfg) {
  if (!std::isfinite(cfg.k_min) || !std::isfinite(cfg.k_max) ||
      !(cfg.k_min > 0.0) || !(cfg.k_max > cfg.k_min)) {
    throw DomainError("probe range requires finite 0 < k_min < k_max");
  }
  if (cfg.points_per_decade < 1) {
    throw DomainError("points_per_decade must be >= 1");
  }
  if (!(cfg.divergence_threshold > 0.0) || !(cfg.vanishing_threshold > 0.0)) {
    throw DomainError("probe thresholds must be positive");
  }
  const double decades = std::log10(cfg.k_max / cfg.k_min);
  // At least seven probes so the three-point trends at both ends are disjoint.
  const int n = std::max<int>(7, static_cast<int>(std::lround(decades * cfg.points_per_decade)) + 1);
  std::vector<double> ks(static_cast<std::size_t>(n));
  const double l0 = std::log(cfg.k_min);
  const double l1 = std::log(cfg.k_max);
  for (int i = 0; i < n; ++i) {
    ks[static_cast<std::size_t>(i)] =
        std::exp(l0 + (l1 - l0) * static_cast<double>(i) / (n - 1));
  }
  ks.front() = cfg.k_min;
  ks.back() = cfg.k_max;
  return ks;
}

// Log-log slope between probes i and j; NaN when either value is not
// strictly positive (which makes every slope-based criterion fail).
double pair_slope(const std::vector<double>& ks, const std::vector<double>& v,
                  std::size_t i, std::size_t j) {
  if (!(v[i] > 0.0) || !(v[j] > 0.0)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return (std::log(v[j]) - std::log(v[i])) / (std::log(ks[j]) - std::log(ks[i]));
}

InadaReport run_probes(const RawParams& p, const ProbeConfig& cfg) {
  const std::vector<double> ks = probe_grid(cfg);
  const std::size_t n = ks.size();
  std::vector<double> f(n), fp(n), fpp(n), share(n);
  detail::parallel_index_for(n, [&](std::size_t i) {
    const detail::Parts pt = detail::parts(p, ks[i]);
    const double fi = detail::f_value(pt, ks[i]);  // throws if undefined/overflow
    f[i] = fi;
    fp[i] = fi * pt.share / ks[i];
    fpp[i] = -fi * pt.curv / (ks[i] * ks[i]);
    share[i] = pt.share;
  });

  InadaReport rep;
  rep.share_limit_zero = share.front();
  rep.share_limit_infinity = share.back();
  rep.slope_estimate_zero = pair_slope(ks, f, 0, 1);
  rep.slope_estimate_infinity = pair_slope(ks, f, n - 2, n - 1);
  {
    std::ostringstream os;
    os << "log grid [" << cfg.k_min << ", " << cfg.k_max << "], " << n
       << " points (" << cfg.points_per_decade << "/decade)";
    rep.grid_description = os.str();
  }

  // Pointwise shape conditions, witnessed at the worst probe.
  const auto worst_f = std::min_element(f.begin(), f.end());
  rep.f_nonneg_and_zero_at_origin.witness_k =
      ks[static_cast<std::size_t>(worst_f - f.begin())];
  rep.f_nonneg_and_zero_at_origin.measured = *worst_f;
  // A positive small-end slope certifies the power-law decay to 0 at the
  // origin; nonnegativity is checked on every probe.
  rep.f_nonneg_and_zero_at_origin.pass =
      *worst_f >= 0.0 && rep.slope_estimate_zero > kSlopeMargin;

  const auto worst_fp = std::min_element(fp.begin(), fp.end());
  rep.f_increasing.witness_k = ks[static_cast<std::size_t>(worst_fp - fp.begin())];
  rep.f_increasing.measured = *worst_fp;
  rep.f_increasing.pass = *worst_fp > 0.0;

  const auto worst_fpp = std::max_element(fpp.begin(), fpp.end());
  rep.f_concave.witness_k = ks[static_cast<std::size_t>(worst_fpp - fpp.begin())];
  rep.f_concave.measured = *worst_fpp;
  rep.f_concave.pass = *worst_fpp < 0.0;

  // Limit conditions: strictly monotone three-point trend at the end, plus an
  // endpoint criterion (threshold cleared, or slope bounded away from flat).
  const bool trend_fp_zero = fp[0] > fp[1] && fp[1] > fp[2];
  const double slope_fp_zero = pair_slope(ks, fp, 0, 1);
  rep.f_prime_diverges_at_zero.witness_k = ks.front();
  rep.f_prime_diverges_at_zero.measured = fp.front();
  rep.f_prime_diverges_at_zero.pass =
      trend_fp_zero &&
      (fp.front() > cfg.divergence_threshold || slope_fp_zero < -kSlopeMargin);

  const bool trend_fp_inf = fp[n - 3] > fp[n - 2] && fp[n - 2] > fp[n - 1];
  const double slope_fp_inf = pair_slope(ks, fp, n - 2, n - 1);
  rep.f_prime_vanishes_at_infinity.witness_k = ks.back();
  rep.f_prime_vanishes_at_infinity.measured = fp.back();
  rep.f_prime_vanishes_at_infinity.pass =
      trend_fp_inf &&
      (fp.back() < cfg.vanishing_threshold || slope_fp_inf < -kSlopeMargin);

  const bool trend_f_inf = f[n - 3] < f[n - 2] && f[n - 2] < f[n - 1];
  rep.f_diverges_at_infinity.witness_k = ks.back();
  rep.f_diverges_at_infinity.measured = f.back();
  rep.f_diverges_at_infinity.pass =
      trend_f_inf && (f.back() > cfg.divergence_threshold ||
                      rep.slope_estimate_infinity > kSlopeMargin);

  return rep;
}

}  // namespace

bool InadaReport::all_pass() const {
  return f_nonneg_and_zero_at_origin.pass && f_increasing.pass &&
         f_prime_diverges_at_zero.pass && f_prime_vanishes_at_infinity.pass &&
         f_concave.pass && f_diverges_at_infinity.pass;
}

InadaReport check_inada(const ValidatedParams& p, const ProbeConfig& cfg) {
  return run_probes(p.raw(), cfg);
}

InadaReport check_inada_diagnostic(const RawParams& p, const ProbeConfig& cfg) {
  return run_probes(p, cfg);
}

double finite_diff_first(const std::function<double(double)>& fn, double k) {
  if (!std::isfinite(k) || k <= 0.0) {
    throw DomainError("finite_diff_first requires finite k > 0");
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double h = k * std::cbrt(eps);
  const double kp = k + h;
  const double km = k - h;
  const double vp = fn(kp);
  const double vm = fn(km);
  if (!std::isfinite(vp) || !std::isfinite(vm)) {
    throw NumericError("finite_diff_first: non-finite sample near k = " +
                       std::to_string(k));
  }
  // Divide by the realized span so step rounding cancels exactly.
  return (vp - vm) / (kp - km);
}

double finite_diff_second(const std::function<double(double)>& fn, double k) {
  if (!std::isfinite(k) || k <= 0.0) {
    throw DomainError("finite_diff_second requires finite k > 0");
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double h = k * std::pow(eps, 0.25);
  const double kp = k + h;
  const double km = k - h;
  const double vp = fn(kp);
  const double v0 = fn(k);
  const double vm = fn(km);
  if (!std::isfinite(vp) || !std::isfinite(v0) || !std::isfinite(vm)) {
    throw NumericError("finite_diff_second: non-finite sample near k = " +
                       std::to_string(k));
  }
  // Divided-difference form tolerates the two realized steps differing by
  // rounding.
  const double left = (v0 - vm) / (k - km);
  const double right = (vp - v0) / (kp - k);
  return 2.0 * (right - left) / (kp - km);
}

}  // namespace ves
