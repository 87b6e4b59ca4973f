#pragma once

#include <string>
#include <vector>

namespace ves {

// Which bundled benchmark parameter set to render (1 or 2).
struct FigureSpec {
  int case_id = 1;
};

// Writes the six per-case files into outdir and returns their paths:
//   sigma_case<N>.{csv,svg}          elasticity over k in [1e-6, 1e6]
//   compare_small_case<N>.{csv,svg}  f vs its small-k envelope on [1e-3, 10]
//   compare_large_case<N>.{csv,svg}  f vs its large-k envelope on [10, 1e4]
// Output is byte-deterministic for a given spec.  Throws DomainError on an
// unknown case id or an unwritable outdir.
std::vector<std::string> emit_figures(const FigureSpec& spec,
                                      const std::string& outdir);

}  // namespace ves
