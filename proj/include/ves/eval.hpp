#pragma once

#include "ves/params.hpp"

namespace ves {

// One evaluation point bundling the quantities the CSV emitters need.
struct EvalRow {
  double k = 0.0;
  double f = 0.0;
  double f_prime = 0.0;
  double f_double_prime = 0.0;
  double sigma = 0.0;
  double share = 0.0;
};

// ln f(k).  Requires k > 0 and finite; throws DomainError otherwise.
double log_f(const ValidatedParams& p, double k);

// f(k) for k >= 0, with f(0) = 0 by continuity.  Throws DomainError for
// k < 0 or non-finite k, NumericError when exp(ln f) would overflow.
double eval_f(const ValidatedParams& p, double k);

// First and second derivatives, k > 0.  Under the feasibility region
// f' > 0 and f'' < 0 for every k > 0.
double eval_f_prime(const ValidatedParams& p, double k);
double eval_f_double_prime(const ValidatedParams& p, double k);

// Curvature factor g(k) defined by
//   f''(k) = -f(k) * g(k) / (k^2 * (alpha*k^psi + beta)^2);
// strictly positive on the feasibility region, so f'' < 0 there.
double eval_g(const ValidatedParams& p, double k);

// Elasticity of f with respect to k: d ln f / d ln k = k f'(k) / f(k).
// Strictly between theta and theta + omega*psi for every k > 0.
double capital_share(const ValidatedParams& p, double k);

// All row quantities from one shared set of intermediates.
EvalRow eval_row(const ValidatedParams& p, double k);

namespace detail {

// ln(1 + e^t) without overflow on either tail.
double softplus(double t);
// 1 / (1 + e^-t), monotone onto (0, 1).
double logistic(double t);

// Per-point intermediates shared by every evaluation routine.  Defined for
// raw tuples as well so the diagnostics path can probe infeasible inputs;
// fields are NaN/inf-propagating in that case rather than checked.
struct Parts {
  double log_odds;  // ln(alpha * k^psi / beta)
  double weight;    // alpha * k^psi / (alpha * k^psi + beta), in (0, 1)
  double share;     // theta + omega * psi * weight
  double curv;      // share*(1 - share) - omega * psi^2 * weight*(1 - weight)
  double log_mag;   // ln |f(k)|
  double sign;      // sign of A
};

Parts parts(const RawParams& p, double k);

// |f| = exp(log_mag) with an explicit overflow signal; sign-aware.
double f_value(const Parts& pt, double k);

}  // namespace detail

}  // namespace ves
