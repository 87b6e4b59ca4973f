#pragma once

#include <functional>
#include <string>

#include "ves/params.hpp"

namespace ves {

// Log-spaced probe grid and decision thresholds for the limit checks.
struct ProbeConfig {
  double k_min = 1e-8;
  double k_max = 1e8;
  int points_per_decade = 4;
  // A limit verdict passes when the endpoint trend is strictly monotone in
  // the right direction AND either the endpoint value clears the matching
  // threshold or the endpoint log-log slope is strictly on the divergent /
  // vanishing side (see check_inada).
  double divergence_threshold = 1e3;
  double vanishing_threshold = 1e-2;
};

// One limit/shape condition: pass flag plus the probe point and value the
// decision is anchored to.
struct Verdict {
  bool pass = false;
  double witness_k = 0.0;
  double measured = 0.0;
};

struct InadaReport {
  Verdict f_nonneg_and_zero_at_origin;  // f >= 0 on the grid, f -> 0 at zero
  Verdict f_increasing;                 // f' > 0 on the grid
  Verdict f_prime_diverges_at_zero;
  Verdict f_prime_vanishes_at_infinity;
  Verdict f_concave;                    // f'' < 0 on the grid
  Verdict f_diverges_at_infinity;

  double share_limit_zero = 0.0;      // capital share at the smallest probe
  double share_limit_infinity = 0.0;  // ... and at the largest
  double slope_estimate_zero = 0.0;   // log-log slope of f at the small end
  double slope_estimate_infinity = 0.0;
  std::string grid_description;

  bool all_pass() const;
};

// Numerically probes the six shape/limit conditions on a log grid.
//
// Divergence and vanishing are limits, so no finite probe can observe them
// directly; each limit verdict therefore combines (a) a strictly monotone
// trend over the three probes nearest the end and (b) an endpoint criterion:
// the raw value clears the configured threshold, or the endpoint log-log
// slope points away from any finite limit.  Throws DomainError on a bad
// config and NumericError if the function value is undefined or overflows at
// some probe (the message names the offending k).
InadaReport check_inada(const ValidatedParams& p, const ProbeConfig& cfg = {});

// Same probes for an unvalidated tuple, so infeasible inputs can be
// diagnosed; expect FAIL verdicts rather than errors when shape conditions
// break.
InadaReport check_inada_diagnostic(const RawParams& p, const ProbeConfig& cfg = {});

// Central finite differences with curvature-balanced steps (h = k*eps^(1/3)
// for the first derivative, k*eps^(1/4) for the second), steps snapped to
// representable abscissae.  Requires k > 0; throws NumericError if fn
// returns a non-finite value at a sample.
double finite_diff_first(const std::function<double(double)>& fn, double k);
double finite_diff_second(const std::function<double(double)>& fn, double k);

}  // namespace ves
