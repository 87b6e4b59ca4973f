#include "ves/calibrate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <vector>

#include "ves/errors.hpp"
#include "ves/eval.hpp"
#include "ves/parallel_for.hpp"

namespace ves {
namespace {

constexpr std::size_t kDim = 5;
// Cap overshoots of an init are pulled this far inside the open region.
constexpr double kInteriorMargin = 0.01;
// Iterates are confined to |x_j| <= kChartBox.  Inside the box the logistic
// and exponential chart maps stay strictly inside the open region in floating
// point (logistic(34) = 1 - 1.7e-15 < 1); past ~37 they saturate exactly onto
// the boundary, where the finite-difference sensitivity is identically zero
// and the iterate could never leave again.
constexpr double kChartBox = 34.0;

using Vec = std::array<double, kDim>;
using Mat = std::array<std::array<double, kDim>, kDim>;

double logit(double v) { return std::log(v) - std::log1p(-v); }

// Unconstrained chart of the feasible region restricted to alpha + beta = 1:
//   x0 = ln A,  x1 = logit(alpha),  x2 = logit(theta + omega*psi),
//   x3 = logit(theta / (theta + omega*psi)),  x4 = -ln(1 - psi).
// Every x in R^5 off the psi = 0 slice (x4 = 0) maps into the region, so the
// optimizer needs no constraints beyond the kChartBox confinement above.
RawParams chart_params(const Vec& x) {
  RawParams p;
  p.A = std::exp(x[0]);
  p.alpha = detail::logistic(x[1]);
  p.beta = 1.0 - p.alpha;
  const double sum = detail::logistic(x[2]);   // theta + omega*psi
  const double frac = detail::logistic(x[3]);  // theta / sum
  p.theta = sum * frac;
  p.psi = 1.0 - std::exp(-x[4]);
  p.omega = sum * (1.0 - frac) / p.psi;
  return p;
}

// Inverse of chart_params; assumes alpha + beta = 1 and strictly interior
// caps (prepare_init establishes both).
Vec chart_coords(const RawParams& p) {
  Vec x;
  x[0] = std::log(p.A);
  x[1] = logit(p.alpha);
  const double sum = p.theta + p.omega * p.psi;
  x[2] = logit(sum);
  x[3] = logit(p.theta / sum);
  x[4] = -std::log1p(-p.psi);
  return x;
}

bool inside_box(const Vec& x) {
  for (const double xj : x) {
    if (!(std::fabs(xj) <= kChartBox)) return false;
  }
  return true;
}

Vec clamp_to_box(Vec x) {
  for (double& xj : x) xj = std::clamp(xj, -kChartBox, kChartBox);
  return x;
}

RawParams prepare_init(const RawParams& init) {
  const bool finite = std::isfinite(init.A) && std::isfinite(init.alpha) &&
                      std::isfinite(init.beta) && std::isfinite(init.theta) &&
                      std::isfinite(init.psi) && std::isfinite(init.omega);
  if (!finite) throw DomainError("fit init must be finite");
  if (!(init.A > 0.0) || !(init.alpha > 0.0) || !(init.beta > 0.0)) {
    throw DomainError("fit init requires A, alpha, beta > 0");
  }
  if (!(init.theta > 0.0)) throw DomainError("fit init requires theta > 0");
  double gain = init.omega * init.psi;
  if (!(gain > 0.0)) {
    throw DomainError("fit init requires omega and psi of the same sign");
  }

  RawParams p = init;
  const double c = 1.0 / (p.alpha + p.beta);
  p.A *= std::pow(c, -p.omega);
  p.alpha *= c;
  p.beta = 1.0 - p.alpha;
  if (p.psi >= 1.0) {  // pull inside psi < 1, keeping omega*psi fixed
    p.psi = 1.0 - kInteriorMargin;
    p.omega = gain / p.psi;
  }
  const double sum = p.theta + gain;
  if (sum >= 1.0) {  // shrink (theta, omega*psi) radially inside the cap
    const double shrink = (1.0 - kInteriorMargin) / sum;
    p.theta *= shrink;
    gain *= shrink;
    p.omega = gain / p.psi;
  }
  (void)ValidatedParams::validated(p);  // chart assumptions now hold
  return p;
}

// Objective sum_i r_i^2 with r_i = ln y_i - ln f(k_i); +inf when any residual
// is non-finite, so such steps get rejected rather than propagated.
double objective_at(const RawParams& p, const std::vector<Observation>& data,
                    const std::vector<double>& log_y, std::vector<double>& r) {
  detail::parallel_index_for(data.size(), [&](std::size_t i) {
    r[i] = log_y[i] - detail::parts(p, data[i].k).log_mag;
  });
  double sum = 0.0;
  for (const double ri : r) {
    if (!std::isfinite(ri)) return std::numeric_limits<double>::infinity();
    sum += ri * ri;
  }
  return sum;
}

// J[i*kDim + j] = d r_i / d x_j by central differences in chart coordinates.
void jacobian_at(const Vec& x, const std::vector<Observation>& data,
                 const std::vector<double>& log_y, std::vector<double>& J,
                 std::vector<double>& rp, std::vector<double>& rm) {
  const std::size_t n = data.size();
  const double root_eps = std::cbrt(std::numeric_limits<double>::epsilon());
  for (std::size_t j = 0; j < kDim; ++j) {
    const double h = root_eps * std::max(1.0, std::fabs(x[j]));
    Vec xp = x;
    Vec xm = x;
    xp[j] += h;
    xm[j] -= h;
    objective_at(chart_params(xp), data, log_y, rp);
    objective_at(chart_params(xm), data, log_y, rm);
    for (std::size_t i = 0; i < n; ++i) {
      J[i * kDim + j] = (rp[i] - rm[i]) / (2.0 * h);
    }
  }
}

void normal_equations(const std::vector<double>& J, const std::vector<double>& r,
                      Mat& H, Vec& g) {
  g.fill(0.0);
  for (auto& row : H) row.fill(0.0);
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double* Ji = &J[i * kDim];
    for (std::size_t a = 0; a < kDim; ++a) {
      g[a] += Ji[a] * r[i];
      for (std::size_t b = a; b < kDim; ++b) H[a][b] += Ji[a] * Ji[b];
    }
  }
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t b = 0; b < a; ++b) H[a][b] = H[b][a];
  }
}

// Solves (H + damping) delta = -g by Gaussian elimination with partial
// pivoting; false on a degenerate system.  The damping floor is scaled by the
// largest diagonal so numerically flat directions still get real damping and
// cannot produce unbounded steps.
bool solve_damped(const Mat& H, const Vec& g, double lambda, Vec& delta) {
  double max_diag = 0.0;
  for (std::size_t a = 0; a < kDim; ++a) max_diag = std::max(max_diag, H[a][a]);
  const double floor = std::max(1e-8 * max_diag, 1e-12);
  std::array<std::array<double, kDim + 1>, kDim> m;
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t b = 0; b < kDim; ++b) m[a][b] = H[a][b];
    m[a][a] += lambda * std::max(H[a][a], floor);
    m[a][kDim] = -g[a];
  }
  for (std::size_t col = 0; col < kDim; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < kDim; ++row) {
      if (std::fabs(m[row][col]) > std::fabs(m[pivot][col])) pivot = row;
    }
    if (!std::isfinite(m[pivot][col]) || !(std::fabs(m[pivot][col]) > 0.0)) {
      return false;
    }
    if (pivot != col) std::swap(m[col], m[pivot]);
    for (std::size_t row = col + 1; row < kDim; ++row) {
      const double factor = m[row][col] / m[col][col];
      for (std::size_t b = col; b <= kDim; ++b) m[row][b] -= factor * m[col][b];
    }
  }
  for (std::size_t a = kDim; a-- > 0;) {
    double v = m[a][kDim];
    for (std::size_t b = a + 1; b < kDim; ++b) v -= m[a][b] * delta[b];
    delta[a] = v / m[a][a];
  }
  for (const double d : delta) {
    if (!std::isfinite(d)) return false;
  }
  return true;
}

double gradient_max_norm(const Vec& g) {
  double worst = 0.0;
  for (const double gj : g) worst = std::max(worst, std::fabs(2.0 * gj));
  return worst;
}

}  // namespace

ValidatedParams normalize(const ValidatedParams& p) {
  RawParams n = p.raw();
  const double c = 1.0 / (n.alpha + n.beta);
  n.A *= std::pow(c, -n.omega);
  n.alpha *= c;
  n.beta *= c;
  return ValidatedParams::validated(n);
}

std::vector<Observation> generate_synthetic(const ValidatedParams& p,
                                            const Grid& grid, double noise_sd,
                                            std::uint64_t seed) {
  if (!std::isfinite(noise_sd) || noise_sd < 0.0) {
    throw DomainError("noise_sd must be finite and >= 0");
  }
  const std::vector<double> ks = grid_points(grid);
  std::vector<Observation> out(ks.size());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, noise_sd > 0.0 ? noise_sd : 1.0);
  for (std::size_t i = 0; i < ks.size(); ++i) {  // serial: RNG order is the contract
    const double lf = log_f(p, ks[i]);
    const double eps = noise_sd > 0.0 ? noise(rng) : 0.0;
    out[i] = {ks[i], std::exp(lf + eps)};
  }
  return out;
}

FitResult fit(const std::vector<Observation>& data, const RawParams& init,
              const FitOptions& opts) {
  if (opts.max_iterations < 1) throw DomainError("max_iterations must be >= 1");
  if (!(opts.objective_decrease_tol > 0.0) || !(opts.step_tol > 0.0) ||
      !(opts.gradient_tol > 0.0) || !(opts.initial_damping > 0.0)) {
    throw DomainError("fit tolerances and damping must be positive");
  }
  const std::size_t n = data.size();
  if (n < 6) throw DomainError("fit needs at least 6 observations");
  std::vector<double> ks(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(data[i].k) || data[i].k <= 0.0 ||
        !std::isfinite(data[i].y) || data[i].y <= 0.0) {
      throw DomainError("fit observations require finite k > 0 and y > 0");
    }
    ks[i] = data[i].k;
  }
  std::sort(ks.begin(), ks.end());
  if (static_cast<std::size_t>(std::unique(ks.begin(), ks.end()) - ks.begin()) < 6) {
    throw DomainError("fit needs at least 6 distinct k values");
  }

  std::vector<double> log_y(n);
  for (std::size_t i = 0; i < n; ++i) log_y[i] = std::log(data[i].y);

  // Extreme but structurally sound inits land inside the box like the cap
  // overshoots handled by prepare_init: pulled to the nearest interior point.
  Vec x = clamp_to_box(chart_coords(prepare_init(init)));
  std::vector<double> r(n), rp(n), rm(n), J(n * kDim);
  double objective = objective_at(chart_params(x), data, log_y, r);
  if (!std::isfinite(objective)) {
    throw NumericError("fit objective is not finite at the init");
  }

  Mat H;
  Vec g;
  double lambda = opts.initial_damping;
  int iterations = 0;
  bool converged = false;

  for (int iter = 1; iter <= opts.max_iterations; ++iter) {
    iterations = iter;
    jacobian_at(x, data, log_y, J, rp, rm);
    objective_at(chart_params(x), data, log_y, r);
    normal_equations(J, r, H, g);
    const double grad_before = gradient_max_norm(g);

    bool accepted = false;
    Vec x_next = x;
    double objective_next = objective;
    double step_norm = 0.0;
    for (int attempt = 0; attempt < 60 && !accepted; ++attempt) {
      Vec delta;
      if (solve_damped(H, g, lambda, delta)) {
        Vec candidate = x;
        double norm_sq = 0.0;
        for (std::size_t j = 0; j < kDim; ++j) {
          candidate[j] += delta[j];
          norm_sq += delta[j] * delta[j];
        }
        const double trial = objective_at(chart_params(candidate), data, log_y, rp);
        if (std::isfinite(trial) && trial < objective) {
          x_next = candidate;
          objective_next = trial;
          step_norm = std::sqrt(norm_sq);
          accepted = true;
          break;
        }
      }
      lambda *= 10.0;
      if (lambda > 1e15) break;
    }

    if (!accepted) {
      // No descent direction at any damping: converged only if the gradient
      // has already vanished (e.g. the init is the optimum).
      converged = grad_before <= opts.gradient_tol;
      break;
    }

    const double rel_decrease =
        (objective - objective_next) /
        std::max(objective, std::numeric_limits<double>::min());
    x = x_next;
    objective = objective_next;
    lambda = std::max(lambda / 3.0, 1e-12);
    if (opts.on_accept) opts.on_accept(iter, objective);

    if (rel_decrease < opts.objective_decrease_tol || step_norm < opts.step_tol) {
      // Stopped by step-size criteria; certify with the gradient where we stand.
      jacobian_at(x, data, log_y, J, rp, rm);
      objective_at(chart_params(x), data, log_y, r);
      normal_equations(J, r, H, g);
      converged = gradient_max_norm(g) <= opts.gradient_tol;
      break;
    }
  }

  ValidatedParams fitted = [&] {
    try {
      return ValidatedParams::validated(chart_params(x));
    } catch (const ValidationError&) {
      // Only reachable when a logistic coordinate saturates in floating point.
      throw NumericError("fit drifted onto the boundary of the feasible region");
    }
  }();
  return FitResult{fitted, std::sqrt(objective / static_cast<double>(n)),
                   iterations, converged};
}

}  // namespace ves
