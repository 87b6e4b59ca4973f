#pragma once

#include <vector>

namespace ves {

enum class Spacing { Log, Linear };

// Evaluation abscissae.  Invariants (enforced by grid_points):
//   0 < k_min, k_min <= k_max, points >= 1,
//   points == 1 only with k_min == k_max, points >= 2 only with k_min < k_max.
struct Grid {
  double k_min = 0.0;
  double k_max = 0.0;
  int points = 0;
  Spacing spacing = Spacing::Log;
};

// Materializes the grid, endpoints exact.  Throws DomainError on a malformed
// grid.
std::vector<double> grid_points(const Grid& grid);

}  // namespace ves
