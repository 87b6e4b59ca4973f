#pragma once

#include <span>
#include <vector>

#include "ves/eval.hpp"
#include "ves/params.hpp"

namespace ves {

// Batch kernels over an abscissa array.  The default entry points parallelize
// across points with OpenMP (each index writes its own slot, so the output is
// bitwise identical to the serial run); the *_serial twins are the reference
// implementations the tests compare against and the benchmark times.
// Exceptions raised inside the parallel region (driven by bad k values or
// overflow) are captured and rethrown on the calling thread.

std::vector<EvalRow> eval_rows(const ValidatedParams& p, std::span<const double> ks);
std::vector<EvalRow> eval_rows_serial(const ValidatedParams& p, std::span<const double> ks);

std::vector<double> sigma_values(const ValidatedParams& p, std::span<const double> ks);
std::vector<double> sigma_values_serial(const ValidatedParams& p, std::span<const double> ks);

}  // namespace ves
