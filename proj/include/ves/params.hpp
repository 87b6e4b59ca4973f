#pragma once

#include <string>

namespace ves {

// Plain parameter tuple of the production technology
//   f(k) = A * k^theta * (alpha * k^psi + beta)^omega.
// Carries no guarantees; run validate() / ValidatedParams::validated() before
// handing it to evaluation routines.
struct RawParams {
  double A = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double theta = 0.0;
  double psi = 0.0;
  double omega = 0.0;
};

// One flag per feasibility condition.  All comparisons are strict; `overall`
// is the conjunction of the individual flags.
struct ValidationReport {
  bool positive_scale = false;              // A > 0
  bool positive_alpha = false;              // alpha > 0
  bool positive_beta = false;               // beta > 0
  bool theta_in_unit_interval = false;      // 0 < theta < 1
  bool share_sum_in_unit_interval = false;  // 0 < theta + omega*psi < 1
  bool psi_below_one = false;               // psi < 1
  bool share_gain_in_unit_interval = false; // 0 < omega*psi < 1
  bool overall = false;

  // Comma-separated names of the failed conditions; empty when overall holds.
  std::string failed_conditions() const;
};

ValidationReport validate(const RawParams& raw);

// Witness that a tuple passed validate().  The only way to construct one is
// through validated(), so downstream code can assume the feasibility region.
class ValidatedParams {
 public:
  // Throws ValidationError naming the failed conditions.
  static ValidatedParams validated(const RawParams& raw);

  double A() const { return p_.A; }
  double alpha() const { return p_.alpha; }
  double beta() const { return p_.beta; }
  double theta() const { return p_.theta; }
  double psi() const { return p_.psi; }
  double omega() const { return p_.omega; }
  const RawParams& raw() const { return p_; }

 private:
  explicit ValidatedParams(const RawParams& p) : p_(p) {}
  RawParams p_;
};

// Built-in parameter sets used by the bundled figures: id 1 has psi > 0
// (elasticity above one), id 2 has psi < 0 (elasticity below one).
// Any other id throws DomainError.
ValidatedParams benchmark_case(int id);

}  // namespace ves
