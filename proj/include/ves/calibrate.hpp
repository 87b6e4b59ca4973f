#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ves/grid.hpp"
#include "ves/params.hpp"

namespace ves {

// One data point (k, y) with k > 0 and y > 0.
struct Observation {
  double k = 0.0;
  double y = 0.0;
};

struct FitOptions {
  int max_iterations = 200;
  double objective_decrease_tol = 1e-12;  // relative decrease per accepted step
  double step_tol = 1e-10;                // Euclidean length of an accepted step
  double gradient_tol = 1e-6;             // max-norm of the objective gradient
  double initial_damping = 1e-3;
  // Called after every accepted step with (iteration, objective).
  std::function<void(int, double)> on_accept;
};

struct FitResult {
  ValidatedParams params;  // normalized so alpha + beta = 1
  double rmse = 0.0;       // sqrt(objective / #observations), log scale
  int iterations = 0;
  bool converged = false;
};

// Rescales (A, alpha, beta) onto the alpha + beta = 1 slice without changing
// f anywhere: multiplying (alpha, beta) by c rescales f by c^omega, which the
// returned A absorbs.  Idempotent.
ValidatedParams normalize(const ValidatedParams& p);

// Deterministic synthetic sample y_i = f(k_i) * exp(eps_i) with
// eps_i ~ N(0, noise_sd^2) from a seeded generator; noise_sd == 0 reproduces
// f exactly.
std::vector<Observation> generate_synthetic(const ValidatedParams& p,
                                            const Grid& grid, double noise_sd,
                                            std::uint64_t seed);

// Nonlinear least squares in log space: minimizes
//   sum_i (ln y_i - ln f(k_i))^2
// with damped least-squares steps (steps accepted only when the objective
// decreases) on an unconstrained chart of the feasible region restricted to
// alpha + beta = 1.  Derivatives come from central finite differences of
// ln f in the chart coordinates.
//
// Requirements: at least 6 observations with 6 distinct k values, all k and y
// strictly positive and finite; otherwise DomainError.  The init must be
// structurally sound (A, alpha, beta, theta > 0 and omega*psi > 0) or
// DomainError is thrown; an init that merely overshoots the open unit-
// interval caps is first normalized, then pulled just inside the region.
//
// Stops when the relative objective decrease or the step norm falls below
// tolerance (converged additionally requires the gradient max-norm to be at
// most gradient_tol) or after max_iterations (converged = false).
FitResult fit(const std::vector<Observation>& data, const RawParams& init,
              const FitOptions& opts = {});

}  // namespace ves
