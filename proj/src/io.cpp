#include "ves/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "ves/errors.hpp"
#include "ves/eval.hpp"
#include "ves/scan.hpp"

namespace ves {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view text, const std::string& context) {
  std::string_view v = trim(text);
  if (!v.empty() && v.front() == '+') v.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
    throw DomainError(context + ": invalid number '" + std::string(text) + "'");
  }
  return value;
}

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DomainError(std::string("cannot read ") + what + ": " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Fixed-precision helpers for SVG output; all deterministic via to_chars.
std::string fixed2(double v) {
  std::array<char, 40> buf;
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
  return std::string(buf.data(), res.ptr);
}

std::string general6(double v) {
  std::array<char, 40> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 6);
  return std::string(buf.data(), res.ptr);
}

std::string escape_xml(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 40> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

RawParams parse_params_text(const std::string& text) {
  static const std::array<std::string_view, 6> keys = {"A",     "alpha", "beta",
                                                       "theta", "psi",   "omega"};
  std::map<std::string_view, double> seen;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line(text.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    const std::string where = "parameter file line " + std::to_string(line_no);
    if (eq == std::string_view::npos) {
      throw DomainError(where + ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      throw DomainError(where + ": unknown key '" + std::string(key) + "'");
    }
    if (seen.count(*it) != 0) {
      throw DomainError(where + ": duplicate key '" + std::string(key) + "'");
    }
    seen[*it] = parse_number(line.substr(eq + 1), where);
  }
  std::string missing;
  for (const auto key : keys) {
    if (seen.count(key) == 0) {
      if (!missing.empty()) missing += ", ";
      missing += key;
    }
  }
  if (!missing.empty()) {
    throw DomainError("parameter file missing keys: " + missing);
  }
  RawParams p;
  p.A = seen["A"];
  p.alpha = seen["alpha"];
  p.beta = seen["beta"];
  p.theta = seen["theta"];
  p.psi = seen["psi"];
  p.omega = seen["omega"];
  return p;
}

RawParams read_params_file(const std::string& path) {
  return parse_params_text(read_file(path, "parameter file"));
}

std::vector<Observation> parse_observations_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("data file is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (trim(line) != "k,y") {
    throw DomainError("data file must start with header 'k,y', got '" + line + "'");
  }
  std::vector<Observation> obs;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const std::string where = "data file line " + std::to_string(line_no);
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw DomainError(where + ": expected exactly two comma-separated fields");
    }
    Observation o;
    o.k = parse_number(std::string_view(line).substr(0, comma), where);
    o.y = parse_number(std::string_view(line).substr(comma + 1), where);
    if (!std::isfinite(o.k) || o.k <= 0.0 || !std::isfinite(o.y) || o.y <= 0.0) {
      throw DomainError(where + ": k and y must be finite and > 0");
    }
    obs.push_back(o);
  }
  return obs;
}

std::vector<Observation> read_observations_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read data file: " + path);
  return parse_observations_csv(in);
}

void emit_eval_csv(const ValidatedParams& p, std::span<const double> ks,
                   std::ostream& out) {
  const std::vector<EvalRow> rows = eval_rows(p, ks);
  out << "k,f,f_prime,f_double_prime,sigma,share\n";
  for (const EvalRow& r : rows) {
    out << format_double(r.k) << ',' << format_double(r.f) << ','
        << format_double(r.f_prime) << ',' << format_double(r.f_double_prime)
        << ',' << format_double(r.sigma) << ',' << format_double(r.share) << '\n';
  }
}

void emit_eval_csv(const ValidatedParams& p, const Grid& grid, std::ostream& out) {
  const std::vector<double> ks = grid_points(grid);
  emit_eval_csv(p, ks, out);
}

void emit_sigma_csv(const ValidatedParams& p, std::span<const double> ks,
                    std::ostream& out) {
  const std::vector<double> sig = sigma_values(p, ks);
  out << "k,sigma\n";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    out << format_double(ks[i]) << ',' << format_double(sig[i]) << '\n';
  }
}

void emit_sigma_csv(const ValidatedParams& p, const Grid& grid, std::ostream& out) {
  const std::vector<double> ks = grid_points(grid);
  emit_sigma_csv(p, ks, out);
}

std::string render_line_chart(const ChartSpec& spec) {
  if (spec.series.empty()) throw DomainError("chart needs at least one series");
  constexpr double kWidth = 640.0, kHeight = 420.0;
  constexpr double kLeft = 72.0, kRight = 16.0, kTop = 18.0, kBottom = 52.0;

  const auto axis_value = [](double v, bool log_axis) {
    return log_axis ? std::log10(v) : v;
  };

  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const ChartSeries& s : spec.series) {
    if (s.x.size() != s.y.size() || s.x.empty()) {
      throw DomainError("chart series must be non-empty with matching lengths");
    }
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double xv = axis_value(s.x[i], spec.log_x);
      const double yv = axis_value(s.y[i], spec.log_y);
      if (!std::isfinite(xv) || !std::isfinite(yv)) {
        throw DomainError("chart values must be finite (and positive on log axes)");
      }
      x_lo = std::min(x_lo, xv);
      x_hi = std::max(x_hi, xv);
      y_lo = std::min(y_lo, yv);
      y_hi = std::max(y_hi, yv);
    }
  }
  if (x_hi - x_lo <= 0.0) { x_lo -= 0.5; x_hi += 0.5; }
  if (y_hi - y_lo <= 0.0) { y_lo -= 0.5; y_hi += 0.5; }

  const auto px = [&](double v) {
    return kLeft + (v - x_lo) / (x_hi - x_lo) * (kWidth - kLeft - kRight);
  };
  const auto py = [&](double v) {
    return kHeight - kBottom - (v - y_lo) / (y_hi - y_lo) * (kHeight - kTop - kBottom);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" "
         "viewBox=\"0 0 640 420\">\n";
  svg << "<rect width=\"640\" height=\"420\" fill=\"white\"/>\n";

  // axes
  svg << "<line x1=\"" << fixed2(kLeft) << "\" y1=\"" << fixed2(kHeight - kBottom)
      << "\" x2=\"" << fixed2(kWidth - kRight) << "\" y2=\""
      << fixed2(kHeight - kBottom) << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << fixed2(kLeft) << "\" y1=\"" << fixed2(kTop) << "\" x2=\""
      << fixed2(kLeft) << "\" y2=\"" << fixed2(kHeight - kBottom)
      << "\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int i = 0; i < kTicks; ++i) {
    const double t = static_cast<double>(i) / (kTicks - 1);
    const double xv = x_lo + t * (x_hi - x_lo);
    const double yv = y_lo + t * (y_hi - y_lo);
    const double xpix = px(xv);
    const double ypix = py(yv);
    const double x_shown = spec.log_x ? std::pow(10.0, xv) : xv;
    const double y_shown = spec.log_y ? std::pow(10.0, yv) : yv;
    svg << "<line x1=\"" << fixed2(xpix) << "\" y1=\"" << fixed2(kHeight - kBottom)
        << "\" x2=\"" << fixed2(xpix) << "\" y2=\"" << fixed2(kHeight - kBottom + 5)
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fixed2(xpix) << "\" y=\"" << fixed2(kHeight - kBottom + 18)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << general6(x_shown)
        << "</text>\n";
    svg << "<line x1=\"" << fixed2(kLeft - 5) << "\" y1=\"" << fixed2(ypix)
        << "\" x2=\"" << fixed2(kLeft) << "\" y2=\"" << fixed2(ypix)
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fixed2(kLeft - 8) << "\" y=\"" << fixed2(ypix + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">" << general6(y_shown)
        << "</text>\n";
  }

  svg << "<text x=\"" << fixed2((kLeft + kWidth - kRight) / 2.0) << "\" y=\""
      << fixed2(kHeight - 14.0) << "\" font-size=\"13\" text-anchor=\"middle\">"
      << escape_xml(spec.x_label) << "</text>\n";
  svg << "<text x=\"16\" y=\"" << fixed2((kTop + kHeight - kBottom) / 2.0)
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << fixed2((kTop + kHeight - kBottom) / 2.0) << ")\">"
      << escape_xml(spec.y_label) << "</text>\n";

  static const std::array<const char*, 2> colors = {"#1f77b4", "#d62728"};
  for (std::size_t s = 0; s < spec.series.size(); ++s) {
    const char* color = colors[std::min<std::size_t>(s, colors.size() - 1)];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    const ChartSeries& series = spec.series[s];
    for (std::size_t i = 0; i < series.x.size(); ++i) {
      if (i != 0) svg << ' ';
      svg << fixed2(px(axis_value(series.x[i], spec.log_x))) << ','
          << fixed2(py(axis_value(series.y[i], spec.log_y)));
    }
    svg << "\"/>\n";
    // legend swatch + label, top-right corner
    const double ly = kTop + 14.0 + 16.0 * static_cast<double>(s);
    svg << "<line x1=\"" << fixed2(kWidth - kRight - 150.0) << "\" y1=\""
        << fixed2(ly - 4.0) << "\" x2=\"" << fixed2(kWidth - kRight - 126.0)
        << "\" y2=\"" << fixed2(ly - 4.0) << "\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"/>\n";
    svg << "<text x=\"" << fixed2(kWidth - kRight - 120.0) << "\" y=\"" << fixed2(ly)
        << "\" font-size=\"12\">" << escape_xml(series.label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  const std::filesystem::path fs_path(path);
  std::error_code ec;
  if (fs_path.has_parent_path()) {
    std::filesystem::create_directories(fs_path.parent_path(), ec);
    if (ec) {
      throw DomainError("cannot create directory " + fs_path.parent_path().string() +
                        ": " + ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write file: " + path);
  out << text;
  out.flush();
  if (!out) throw DomainError("write failed: " + path);
}

}  // namespace ves
