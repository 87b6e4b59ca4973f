#pragma once

#include <utility>

#include "ves/params.hpp"

namespace ves {

// Power-law envelopes of f: near zero f ~ A_z * k^alpha_z, near infinity
// f ~ B_z... see asymptotic_summary().  Which inner term dominates at which
// end flips with the sign of psi.
struct AsymptoticSummary {
  double alpha_z = 0.0;  // exponent of the small-k envelope
  double beta_z = 0.0;   // exponent of the large-k envelope
  double A_z = 0.0;      // coefficient of the small-k envelope
  double B_z = 0.0;      // coefficient of the large-k envelope
  bool psi_positive = false;
};

enum class LimitEnd { Zero, Infinity };

AsymptoticSummary asymptotic_summary(const ValidatedParams& p);

// {alpha_z, beta_z}: {theta, theta + omega*psi} for psi > 0, swapped otherwise.
std::pair<double, double> limit_exponents(const ValidatedParams& p);

// {A_z, B_z}: {A*beta^omega, A*alpha^omega} for psi > 0, swapped otherwise.
std::pair<double, double> limit_coefficients(const ValidatedParams& p);

// The envelope functions themselves; k > 0.
double limit_function_at_zero(const ValidatedParams& p, double k);
double limit_function_at_infinity(const ValidatedParams& p, double k);

// |f(k)/envelope(k) - 1| computed on the log scale, so it stays exact even
// where f itself would overflow.  Monotone toward 0 as k approaches the end.
double relative_gap(const ValidatedParams& p, double k, LimitEnd end);

// d ln f / d ln k; tends to alpha_z at zero and beta_z at infinity.
double loglog_slope(const ValidatedParams& p, double k);

}  // namespace ves
