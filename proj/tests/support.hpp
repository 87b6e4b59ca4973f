#pragma once

// Shared helpers for the test binaries: an extended-precision oracle that
// evaluates the textbook formulas literally (no reformulation, so it is an
// independent cross-check of the library's log-space implementation) and a
// rejection sampler covering the whole feasibility region.

#include <cmath>
#include <cstdint>
#include <random>

#include "ves/params.hpp"

namespace ves::testing {

inline long double powl_(long double base, long double e) { return std::pow(base, e); }

// f(k) = A * k^theta * (alpha*k^psi + beta)^omega, evaluated literally.
inline long double oracle_f(const RawParams& p, long double k) {
  const long double base = static_cast<long double>(p.alpha) * powl_(k, p.psi) +
                           static_cast<long double>(p.beta);
  return static_cast<long double>(p.A) * powl_(k, p.theta) * powl_(base, p.omega);
}

// f'(k) = A * k^(theta-1) * (alpha*k^psi + beta)^(omega-1)
//         * (theta*beta + (theta + omega*psi) * alpha*k^psi)
inline long double oracle_f_prime(const RawParams& p, long double k) {
  const long double ak = static_cast<long double>(p.alpha) * powl_(k, p.psi);
  const long double base = ak + static_cast<long double>(p.beta);
  const long double bracket =
      static_cast<long double>(p.theta) * static_cast<long double>(p.beta) +
      (static_cast<long double>(p.theta) +
       static_cast<long double>(p.omega) * static_cast<long double>(p.psi)) *
          ak;
  return static_cast<long double>(p.A) * powl_(k, static_cast<long double>(p.theta) - 1.0L) *
         powl_(base, static_cast<long double>(p.omega) - 1.0L) * bracket;
}

// Quadratic-in-alpha*k^psi curvature factor with
// f''(k) = -A * k^(theta-2) * (alpha*k^psi + beta)^(omega-2) * oracle_g(k).
inline long double oracle_g(const RawParams& p, long double k) {
  const long double t = p.theta;
  const long double w = static_cast<long double>(p.omega) * static_cast<long double>(p.psi);
  const long double ak = static_cast<long double>(p.alpha) * powl_(k, p.psi);
  const long double b = p.beta;
  const long double c2 = (t + w) * (1.0L - t - w);
  const long double c1 = 2.0L * t * (1.0L - t) + w * (1.0L - 2.0L * t) -
                         w * static_cast<long double>(p.psi);
  const long double c0 = t * (1.0L - t);
  return c2 * ak * ak + c1 * ak * b + c0 * b * b;
}

inline long double oracle_f_double_prime(const RawParams& p, long double k) {
  const long double base = static_cast<long double>(p.alpha) * powl_(k, p.psi) +
                           static_cast<long double>(p.beta);
  return -static_cast<long double>(p.A) *
         powl_(k, static_cast<long double>(p.theta) - 2.0L) *
         powl_(base, static_cast<long double>(p.omega) - 2.0L) * oracle_g(p, k);
}

// sigma(k) = f' * (f - k*f') / (-k * f * f''), the derivative quotient.
inline long double oracle_sigma(const RawParams& p, long double k) {
  const long double f = oracle_f(p, k);
  const long double fp = oracle_f_prime(p, k);
  const long double fpp = oracle_f_double_prime(p, k);
  return fp * (f - k * fp) / (-k * f * fpp);
}

// d ln f / d ln k = k * f'/f, literally.
inline long double oracle_share(const RawParams& p, long double k) {
  return k * oracle_f_prime(p, k) / oracle_f(p, k);
}

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

inline double rel_diff_vs(long double reference, double value) {
  const long double scale =
      std::max(std::fabs(reference), static_cast<long double>(std::fabs(value)));
  if (scale == 0.0L) return 0.0;
  return static_cast<double>(std::fabs(static_cast<long double>(value) - reference) / scale);
}

// Uniform rejection sampler over the feasibility region, restricted to the
// alpha + beta = 1 slice (evaluations then stay in double range for every
// representable k, even with omega as large as ~1e6 when psi is tiny).
class PhiSampler {
 public:
  explicit PhiSampler(std::uint64_t seed) : rng_(seed) {}

  RawParams next_raw() {
    for (;;) {
      RawParams p;
      p.theta = uniform(0.01, 0.99);
      p.psi = uniform(-2.0, 1.0);
      if (std::fabs(p.psi) < 1e-6 || p.psi >= 1.0) continue;
      const double gain = uniform(0.01, 0.99);  // omega * psi
      const double sum = p.theta + gain;
      if (sum <= 0.01 || sum >= 0.99) continue;
      p.omega = gain / p.psi;
      p.alpha = uniform(0.1, 0.9);
      p.beta = 1.0 - p.alpha;
      p.A = std::exp(uniform(std::log(0.25), std::log(4.0)));
      return p;
    }
  }

  ValidatedParams next() { return ValidatedParams::validated(next_raw()); }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ves::testing
