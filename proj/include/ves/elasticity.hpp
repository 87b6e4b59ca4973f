#pragma once

#include <vector>

#include "ves/grid.hpp"
#include "ves/params.hpp"

namespace ves {

// Whether sigma(k) sits above or below one for every k > 0; decided by the
// sign of omega alone.
enum class Regime { AboveOne, BelowOne };

const char* to_string(Regime r);

// Elasticity values over a grid; grid is strictly increasing and sigma[i]
// corresponds to grid[i].
struct SigmaSeries {
  std::vector<double> grid;
  std::vector<double> sigma;
};

// Elasticity of substitution sigma(k) from the closed form
//   sigma = s*(1-s) / (s*(1-s) - omega*psi^2*w*(1-w)),
// s the capital share and w the inner weight.  Requires k > 0; throws
// NumericError if the denominator is not strictly positive (impossible on
// the feasibility region).
double sigma_closed(const ValidatedParams& p, double k);

// Same quantity assembled from f, f', f'' alone:
//   sigma = f' * (f - k*f') / (-k * f * f'').
// Kept as an independent route for cross-checking the closed form; throws
// NumericError on a vanishing or non-finite denominator.
double sigma_from_derivatives(const ValidatedParams& p, double k);

// sigma_closed across a grid (parallel batch kernel underneath).
SigmaSeries sigma_scan(const ValidatedParams& p, const Grid& grid);

Regime classify_regime(const ValidatedParams& p);

}  // namespace ves
