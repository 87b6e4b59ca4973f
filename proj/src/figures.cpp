#include "ves/figures.hpp"

#include <sstream>
#include <vector>

#include "ves/asymptotics.hpp"
#include "ves/elasticity.hpp"
#include "ves/eval.hpp"
#include "ves/io.hpp"
#include "ves/scan.hpp"

namespace ves {
namespace {

// Wide enough that sigma visibly returns to 1 at both ends (within ~1e-4 for
// the bundled cases) while the unit-elasticity crossover region stays inside.
constexpr Grid kSigmaGrid{1e-6, 1e6, 601, Spacing::Log};
// Comparison panels: small-k envelope match on the left, divergence visible
// on the right (and mirrored for the large-k panel).
constexpr Grid kSmallGrid{1e-3, 10.0, 200, Spacing::Log};
constexpr Grid kLargeGrid{10.0, 1e4, 200, Spacing::Log};

std::string csv_two_cols(const char* h1, const char* h2,
                         const std::vector<double>& a, const std::vector<double>& b) {
  std::ostringstream out;
  out << h1 << ',' << h2 << '\n';
  for (std::size_t i = 0; i < a.size(); ++i) {
    out << format_double(a[i]) << ',' << format_double(b[i]) << '\n';
  }
  return out.str();
}

std::string csv_three_cols(const char* h1, const char* h2, const char* h3,
                           const std::vector<double>& a, const std::vector<double>& b,
                           const std::vector<double>& c) {
  std::ostringstream out;
  out << h1 << ',' << h2 << ',' << h3 << '\n';
  for (std::size_t i = 0; i < a.size(); ++i) {
    out << format_double(a[i]) << ',' << format_double(b[i]) << ','
        << format_double(c[i]) << '\n';
  }
  return out.str();
}

}  // namespace

std::vector<std::string> emit_figures(const FigureSpec& spec,
                                      const std::string& outdir) {
  const ValidatedParams p = benchmark_case(spec.case_id);
  const std::string tag = "_case" + std::to_string(spec.case_id);
  std::vector<std::string> paths;
  const auto emit = [&](const std::string& stem, const std::string& text) {
    const std::string path = outdir + "/" + stem;
    write_text_file(path, text);
    paths.push_back(path);
  };

  {
    const SigmaSeries series = sigma_scan(p, kSigmaGrid);
    emit("sigma" + tag + ".csv",
         csv_two_cols("k", "sigma", series.grid, series.sigma));
    ChartSpec chart;
    chart.x_label = "k";
    chart.y_label = "sigma";
    chart.log_x = true;
    chart.series = {{"sigma", series.grid, series.sigma}};
    emit("sigma" + tag + ".svg", render_line_chart(chart));
  }

  const auto compare_panel = [&](const Grid& grid, bool small_end,
                                 const char* stem, const char* limit_name) {
    const std::vector<double> ks = grid_points(grid);
    const std::vector<EvalRow> rows = eval_rows(p, ks);
    std::vector<double> f(ks.size()), envelope(ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i) {
      f[i] = rows[i].f;
      envelope[i] = small_end ? limit_function_at_zero(p, ks[i])
                              : limit_function_at_infinity(p, ks[i]);
    }
    emit(std::string(stem) + tag + ".csv",
         csv_three_cols("k", "f", limit_name, ks, f, envelope));
    ChartSpec chart;
    chart.x_label = "k";
    chart.y_label = "output";
    chart.log_x = true;
    chart.log_y = true;
    chart.series = {{"f", ks, f}, {limit_name, ks, envelope}};
    emit(std::string(stem) + tag + ".svg", render_line_chart(chart));
  };
  compare_panel(kSmallGrid, true, "compare_small", "limit_zero");
  compare_panel(kLargeGrid, false, "compare_large", "limit_inf");

  return paths;
}

}  // namespace ves
