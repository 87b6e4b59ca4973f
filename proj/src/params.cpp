#include "ves/params.hpp"

#include <cmath>

#include "ves/errors.hpp"

namespace ves {

ValidationReport validate(const RawParams& raw) {
  ValidationReport r;
  const double gain = raw.omega * raw.psi;  // exponent gain theta -> theta + gain
  const double sum = raw.theta + gain;
  // std::isfinite guards NaN/inf tuples: every strict comparison below is
  // false for NaN, but inf could sneak through e.g. psi_below_one.
  const bool finite = std::isfinite(raw.A) && std::isfinite(raw.alpha) &&
                      std::isfinite(raw.beta) && std::isfinite(raw.theta) &&
                      std::isfinite(raw.psi) && std::isfinite(raw.omega);
  r.positive_scale = finite && raw.A > 0.0;
  r.positive_alpha = finite && raw.alpha > 0.0;
  r.positive_beta = finite && raw.beta > 0.0;
  r.theta_in_unit_interval = finite && raw.theta > 0.0 && raw.theta < 1.0;
  r.share_sum_in_unit_interval = finite && sum > 0.0 && sum < 1.0;
  r.psi_below_one = finite && raw.psi < 1.0;
  r.share_gain_in_unit_interval = finite && gain > 0.0 && gain < 1.0;
  r.overall = r.positive_scale && r.positive_alpha && r.positive_beta &&
              r.theta_in_unit_interval && r.share_sum_in_unit_interval &&
              r.psi_below_one && r.share_gain_in_unit_interval;
  return r;
}

std::string ValidationReport::failed_conditions() const {
  std::string out;
  auto add = [&out](bool ok, const char* name) {
    if (ok) return;
    if (!out.empty()) out += ", ";
    out += name;
  };
  add(positive_scale, "positive_scale");
  add(positive_alpha, "positive_alpha");
  add(positive_beta, "positive_beta");
  add(theta_in_unit_interval, "theta_in_unit_interval");
  add(share_sum_in_unit_interval, "share_sum_in_unit_interval");
  add(psi_below_one, "psi_below_one");
  add(share_gain_in_unit_interval, "share_gain_in_unit_interval");
  return out;
}

ValidatedParams ValidatedParams::validated(const RawParams& raw) {
  const ValidationReport r = validate(raw);
  if (!r.overall) {
    throw ValidationError("parameters rejected: " + r.failed_conditions());
  }
  return ValidatedParams(raw);
}

ValidatedParams benchmark_case(int id) {
  RawParams p;
  p.A = 1.05;
  p.alpha = 0.2;
  p.beta = 0.8;
  p.theta = 0.8;
  switch (id) {
    case 1:
      p.psi = 0.9;
      p.omega = 0.2;
      break;
    case 2:
      p.psi = -0.9;
      p.omega = -0.2;
      break;
    default:
      throw DomainError("unknown benchmark case id " + std::to_string(id) +
                        " (expected 1 or 2)");
  }
  return ValidatedParams::validated(p);
}

}  // namespace ves
