#include "ves/scan.hpp"

#include <cstddef>

#include "ves/elasticity.hpp"
#include "ves/parallel_for.hpp"

namespace ves {

using detail::parallel_index_for;

std::vector<EvalRow> eval_rows(const ValidatedParams& p, std::span<const double> ks) {
  std::vector<EvalRow> rows(ks.size());
  parallel_index_for(ks.size(), [&](std::size_t i) { rows[i] = eval_row(p, ks[i]); });
  return rows;
}

std::vector<EvalRow> eval_rows_serial(const ValidatedParams& p,
                                      std::span<const double> ks) {
  std::vector<EvalRow> rows(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) rows[i] = eval_row(p, ks[i]);
  return rows;
}

std::vector<double> sigma_values(const ValidatedParams& p, std::span<const double> ks) {
  std::vector<double> out(ks.size());
  parallel_index_for(ks.size(), [&](std::size_t i) { out[i] = sigma_closed(p, ks[i]); });
  return out;
}

std::vector<double> sigma_values_serial(const ValidatedParams& p,
                                        std::span<const double> ks) {
  std::vector<double> out(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) out[i] = sigma_closed(p, ks[i]);
  return out;
}

}  // namespace ves
