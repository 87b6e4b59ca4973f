#include "ves/grid.hpp"

#include <cmath>
#include <string>

#include "ves/errors.hpp"

namespace ves {

std::vector<double> grid_points(const Grid& grid) {
  if (!std::isfinite(grid.k_min) || !std::isfinite(grid.k_max) ||
      grid.k_min <= 0.0) {
    throw DomainError("grid endpoints must be finite with k_min > 0");
  }
  if (grid.k_max < grid.k_min) {
    throw DomainError("grid requires k_min <= k_max");
  }
  if (grid.points < 1) {
    throw DomainError("grid needs at least one point");
  }
  if (grid.points == 1 && grid.k_min != grid.k_max) {
    throw DomainError("a single-point grid requires k_min == k_max");
  }
  if (grid.points >= 2 && grid.k_min == grid.k_max) {
    throw DomainError("a multi-point grid requires k_min < k_max");
  }

  std::vector<double> ks(static_cast<std::size_t>(grid.points));
  const int n = grid.points;
  if (n == 1) {
    ks[0] = grid.k_min;
    return ks;
  }
  if (grid.spacing == Spacing::Log) {
    const double l0 = std::log(grid.k_min);
    const double l1 = std::log(grid.k_max);
    for (int i = 0; i < n; ++i) {
      const double w = static_cast<double>(i) / (n - 1);
      ks[static_cast<std::size_t>(i)] = std::exp(l0 + w * (l1 - l0));
    }
  } else {
    for (int i = 0; i < n; ++i) {
      const double w = static_cast<double>(i) / (n - 1);
      ks[static_cast<std::size_t>(i)] = grid.k_min + w * (grid.k_max - grid.k_min);
    }
  }
  ks.front() = grid.k_min;
  ks.back() = grid.k_max;
  return ks;
}

}  // namespace ves
