#include "ves/eval.hpp"

#include <cmath>
#include <string>

#include "ves/errors.hpp"

namespace ves {
namespace {

// exp() overflows double a little above this; treat anything beyond as a
// numeric failure instead of returning inf.
constexpr double kLogDoubleMax = 709.0;

void require_positive_k(double k, const char* where) {
  if (!std::isfinite(k) || k <= 0.0) {
    throw DomainError(std::string(where) + ": capital must be finite and > 0, got " +
                      std::to_string(k));
  }
}

[[noreturn]] void throw_overflow(double k) {
  throw NumericError("production value overflows double range at k = " +
                     std::to_string(k));
}

}  // namespace

namespace detail {

double softplus(double t) {
  if (t > 0.0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

double logistic(double t) {
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

// All quantities are driven by the weight w = alpha*k^psi / (alpha*k^psi + beta)
// through its log-odds psi*ln k + ln(alpha/beta).  Working on that scale keeps
// k^psi out of intermediate products, so nothing here overflows before ln f
// itself leaves the double range:
//   d ln f / d ln k            = theta + omega*psi*w            (share)
//   -k^2 f''/f                 = share*(1-share) - omega*psi^2*w*(1-w)  (curv)
//   ln f = ln A + theta*ln k + omega*(ln beta + softplus(log_odds))
Parts parts(const RawParams& p, double k) {
  Parts pt;
  const double lk = std::log(k);
  pt.log_odds = p.psi * lk + std::log(p.alpha / p.beta);
  pt.weight = logistic(pt.log_odds);
  const double gain = p.omega * p.psi;
  pt.share = p.theta + gain * pt.weight;
  pt.curv = pt.share * (1.0 - pt.share) -
            gain * p.psi * pt.weight * (1.0 - pt.weight);
  pt.log_mag = std::log(std::fabs(p.A)) + p.theta * lk +
               p.omega * (std::log(p.beta) + softplus(pt.log_odds));
  pt.sign = std::signbit(p.A) ? -1.0 : 1.0;
  return pt;
}

double f_value(const Parts& pt, double k) {
  if (pt.log_mag > kLogDoubleMax) throw_overflow(k);
  if (std::isnan(pt.log_mag)) {
    throw NumericError("production value is undefined at k = " + std::to_string(k));
  }
  return pt.sign * std::exp(pt.log_mag);
}

}  // namespace detail

double log_f(const ValidatedParams& p, double k) {
  require_positive_k(k, "log_f");
  return detail::parts(p.raw(), k).log_mag;
}

double eval_f(const ValidatedParams& p, double k) {
  if (!std::isfinite(k) || k < 0.0) {
    throw DomainError("eval_f: capital must be finite and >= 0, got " +
                      std::to_string(k));
  }
  if (k == 0.0) return 0.0;  // continuous extension: theta > 0 forces f -> 0
  return detail::f_value(detail::parts(p.raw(), k), k);
}

double eval_f_prime(const ValidatedParams& p, double k) {
  require_positive_k(k, "eval_f_prime");
  const detail::Parts pt = detail::parts(p.raw(), k);
  return detail::f_value(pt, k) * pt.share / k;
}

double eval_f_double_prime(const ValidatedParams& p, double k) {
  require_positive_k(k, "eval_f_double_prime");
  const detail::Parts pt = detail::parts(p.raw(), k);
  return -detail::f_value(pt, k) * pt.curv / (k * k);
}

double eval_g(const ValidatedParams& p, double k) {
  require_positive_k(k, "eval_g");
  const detail::Parts pt = detail::parts(p.raw(), k);
  // g = (alpha*k^psi + beta)^2 * curv, assembled in logs to dodge overflow.
  const double log_base2 =
      2.0 * (std::log(p.beta()) + detail::softplus(pt.log_odds));
  if (log_base2 > kLogDoubleMax) throw_overflow(k);
  return std::exp(log_base2) * pt.curv;
}

double capital_share(const ValidatedParams& p, double k) {
  require_positive_k(k, "capital_share");
  return detail::parts(p.raw(), k).share;
}

EvalRow eval_row(const ValidatedParams& p, double k) {
  require_positive_k(k, "eval_row");
  const detail::Parts pt = detail::parts(p.raw(), k);
  const double f = detail::f_value(pt, k);
  EvalRow row;
  row.k = k;
  row.f = f;
  row.f_prime = f * pt.share / k;
  row.f_double_prime = -f * pt.curv / (k * k);
  row.sigma = pt.share * (1.0 - pt.share) / pt.curv;
  row.share = pt.share;
  return row;
}

}  // namespace ves
