#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ves/calibrate.hpp"
#include "ves/grid.hpp"
#include "ves/params.hpp"

namespace ves {

// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

// Parameter file grammar: one `key = value` per line, '#' starts a comment,
// blank lines ignored.  Exactly the keys {A, alpha, beta, theta, psi, omega},
// each once.  Unknown or duplicate keys, bad numbers, and missing keys all
// throw DomainError, as does an unreadable file.
RawParams read_params_file(const std::string& path);
RawParams parse_params_text(const std::string& text);

// Observation CSV: header exactly "k,y", then one `k,y` row per line.
// Throws DomainError on malformed content or nonpositive/non-finite entries.
std::vector<Observation> read_observations_csv(const std::string& path);
std::vector<Observation> parse_observations_csv(std::istream& in);

// Evaluation table, header "k,f,f_prime,f_double_prime,sigma,share".
void emit_eval_csv(const ValidatedParams& p, std::span<const double> ks,
                   std::ostream& out);
void emit_eval_csv(const ValidatedParams& p, const Grid& grid, std::ostream& out);

// Elasticity table, header "k,sigma".
void emit_sigma_csv(const ValidatedParams& p, std::span<const double> ks,
                    std::ostream& out);
void emit_sigma_csv(const ValidatedParams& p, const Grid& grid, std::ostream& out);

// Minimal deterministic SVG line chart: axes, ticks, axis labels, legend, and
// one polyline per series.
struct ChartSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct ChartSpec {
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<ChartSeries> series;  // one or two
};

std::string render_line_chart(const ChartSpec& spec);

// Writes text to path (creating parent directories); DomainError on failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ves
