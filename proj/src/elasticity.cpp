#include "ves/elasticity.hpp"

#include <cmath>
#include <string>

#include "ves/errors.hpp"
#include "ves/eval.hpp"
#include "ves/scan.hpp"

namespace ves {

const char* to_string(Regime r) {
  return r == Regime::AboveOne ? "ABOVE_ONE" : "BELOW_ONE";
}

double sigma_closed(const ValidatedParams& p, double k) {
  // share/curv come from the same intermediates as eval_row.
  if (!std::isfinite(k) || k <= 0.0) {
    throw DomainError("sigma_closed: capital must be finite and > 0, got " +
                      std::to_string(k));
  }
  const detail::Parts pt = detail::parts(p.raw(), k);
  const double num = pt.share * (1.0 - pt.share);
  if (!(pt.curv > 0.0) || !std::isfinite(pt.curv)) {
    throw NumericError("sigma_closed: curvature denominator failed at k = " +
                       std::to_string(k));
  }
  return num / pt.curv;
}

double sigma_from_derivatives(const ValidatedParams& p, double k) {
  const double f = eval_f(p, k);
  const double fp = eval_f_prime(p, k);
  const double fpp = eval_f_double_prime(p, k);
  const double den = -k * f * fpp;
  if (!std::isfinite(den) || den == 0.0) {
    throw NumericError(
        "sigma_from_derivatives: derivative denominator failed at k = " +
        std::to_string(k));
  }
  return fp * (f - k * fp) / den;
}

SigmaSeries sigma_scan(const ValidatedParams& p, const Grid& grid) {
  SigmaSeries series;
  series.grid = grid_points(grid);
  series.sigma = sigma_values(p, series.grid);
  return series;
}

Regime classify_regime(const ValidatedParams& p) {
  // sign(sigma - 1) == sign(omega) pointwise, so the regime is global.
  return p.omega() > 0.0 ? Regime::AboveOne : Regime::BelowOne;
}

}  // namespace ves
