#include "ves/asymptotics.hpp"

#include <cmath>
#include <string>

#include "ves/errors.hpp"
#include "ves/eval.hpp"

namespace ves {
namespace {

void require_positive_k(double k, const char* where) {
  if (!std::isfinite(k) || k <= 0.0) {
    throw DomainError(std::string(where) + ": capital must be finite and > 0, got " +
                      std::to_string(k));
  }
}

double log_envelope(const ValidatedParams& p, double k, LimitEnd end) {
  const AsymptoticSummary s = asymptotic_summary(p);
  const double coef = end == LimitEnd::Zero ? s.A_z : s.B_z;
  const double expo = end == LimitEnd::Zero ? s.alpha_z : s.beta_z;
  return std::log(coef) + expo * std::log(k);
}

}  // namespace

AsymptoticSummary asymptotic_summary(const ValidatedParams& p) {
  AsymptoticSummary s;
  s.psi_positive = p.psi() > 0.0;
  const double with_gain = p.theta() + p.omega() * p.psi();
  // For psi > 0 the alpha*k^psi term dies at zero and dominates at infinity;
  // for psi < 0 the roles swap.
  if (s.psi_positive) {
    s.alpha_z = p.theta();
    s.beta_z = with_gain;
    s.A_z = p.A() * std::pow(p.beta(), p.omega());
    s.B_z = p.A() * std::pow(p.alpha(), p.omega());
  } else {
    s.alpha_z = with_gain;
    s.beta_z = p.theta();
    s.A_z = p.A() * std::pow(p.alpha(), p.omega());
    s.B_z = p.A() * std::pow(p.beta(), p.omega());
  }
  return s;
}

std::pair<double, double> limit_exponents(const ValidatedParams& p) {
  const AsymptoticSummary s = asymptotic_summary(p);
  return {s.alpha_z, s.beta_z};
}

std::pair<double, double> limit_coefficients(const ValidatedParams& p) {
  const AsymptoticSummary s = asymptotic_summary(p);
  return {s.A_z, s.B_z};
}

double limit_function_at_zero(const ValidatedParams& p, double k) {
  require_positive_k(k, "limit_function_at_zero");
  return std::exp(log_envelope(p, k, LimitEnd::Zero));
}

double limit_function_at_infinity(const ValidatedParams& p, double k) {
  require_positive_k(k, "limit_function_at_infinity");
  return std::exp(log_envelope(p, k, LimitEnd::Infinity));
}

double relative_gap(const ValidatedParams& p, double k, LimitEnd end) {
  require_positive_k(k, "relative_gap");
  // f/envelope - 1 via expm1 of the log difference; both logs are finite for
  // any representable k even when f itself is not.
  const double diff = log_f(p, k) - log_envelope(p, k, end);
  return std::fabs(std::expm1(diff));
}

double loglog_slope(const ValidatedParams& p, double k) {
  return capital_share(p, k);
}

}  // namespace ves
