#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "ves/elasticity.hpp"
#include "ves/errors.hpp"
#include "ves/eval.hpp"
#include "ves/grid.hpp"
#include "ves/io.hpp"
#include "ves/params.hpp"

using ves::ChartSeries;
using ves::ChartSpec;
using ves::Grid;
using ves::Observation;
using ves::RawParams;
using ves::Spacing;
using ves::ValidatedParams;

namespace {

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::current_path() / "io_test_scratch";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("format_double round-trips exactly and stays shortest") {
  const std::vector<double> values = {
      0.0,   1.0,         0.1,    1.05,       -0.9,
      1.0 / 3.0,          1e-300, 1e308,      5e-324,
      -123456.789,        2.5e-10, 9007199254740993.0};
  for (const double v : values) {
    const std::string s = ves::format_double(v);
    CAPTURE(s);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  CHECK(ves::format_double(1.0) == "1");
  CHECK(ves::format_double(0.1) == "0.1");
  CHECK(ves::format_double(1.05) == "1.05");
  CHECK(ves::format_double(-0.9) == "-0.9");
  CHECK(std::signbit(std::strtod(ves::format_double(-0.0).c_str(), nullptr)));
}

TEST_CASE("parameter files parse with comments, spacing, and sign prefixes") {
  const std::string text =
      "# benchmark tuple\n"
      "A = 1.05\n"
      "alpha=0.2   # inner weight\n"
      "\n"
      "beta =\t0.8\n"
      "theta = +0.8\n"
      "psi = -0.9\n"
      "omega = -0.2\r\n";
  const RawParams p = ves::parse_params_text(text);
  CHECK(p.A == 1.05);
  CHECK(p.alpha == 0.2);
  CHECK(p.beta == 0.8);
  CHECK(p.theta == 0.8);
  CHECK(p.psi == -0.9);
  CHECK(p.omega == -0.2);
}

TEST_CASE("parameter file grammar violations are rejected") {
  const std::string base =
      "A=1\nalpha=0.2\nbeta=0.8\ntheta=0.8\npsi=0.9\nomega=0.2\n";
  CHECK_NOTHROW((void)ves::parse_params_text(base));

  CHECK_THROWS_WITH_AS((void)ves::parse_params_text(base + "gamma=2\n"),
                       doctest::Contains("unknown key"), ves::DomainError);
  CHECK_THROWS_WITH_AS((void)ves::parse_params_text(base + "A=2\n"),
                       doctest::Contains("duplicate key"), ves::DomainError);
  CHECK_THROWS_WITH_AS(
      (void)ves::parse_params_text("A=1\nalpha=0.2\nbeta=0.8\n"),
      doctest::Contains("missing keys"), ves::DomainError);
  CHECK_THROWS_AS((void)ves::parse_params_text(
                      "A=one\nalpha=0.2\nbeta=0.8\ntheta=0.8\npsi=0.9\nomega=0.2\n"),
                  ves::DomainError);
  CHECK_THROWS_AS((void)ves::parse_params_text(
                      "A=\nalpha=0.2\nbeta=0.8\ntheta=0.8\npsi=0.9\nomega=0.2\n"),
                  ves::DomainError);
  CHECK_THROWS_WITH_AS((void)ves::parse_params_text(base + "just words\n"),
                       doctest::Contains("expected 'key = value'"),
                       ves::DomainError);
  CHECK_THROWS_AS((void)ves::read_params_file("no/such/file.params"),
                  ves::DomainError);
}

TEST_CASE("observation CSV parsing") {
  std::istringstream good("k,y\r\n1,2\n0.5,0.25\n\n3e2,+7\n");
  const std::vector<Observation> obs = ves::parse_observations_csv(good);
  REQUIRE(obs.size() == 3);
  CHECK(obs[0].k == 1.0);
  CHECK(obs[0].y == 2.0);
  CHECK(obs[1].k == 0.5);
  CHECK(obs[1].y == 0.25);
  CHECK(obs[2].k == 300.0);
  CHECK(obs[2].y == 7.0);

  const auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS((void)ves::parse_observations_csv(in), ves::DomainError);
  };
  reject("");
  reject("x,y\n1,2\n");
  reject("k,y\n1\n");
  reject("k,y\n1,2,3\n");
  reject("k,y\n1,two\n");
  reject("k,y\n0,2\n");
  reject("k,y\n1,-2\n");
  reject("k,y\n1,inf\n");
  reject("k,y\nnan,1\n");
  CHECK_THROWS_AS((void)ves::read_observations_csv("no/such/data.csv"),
                  ves::DomainError);
}

TEST_CASE("evaluation tables carry the exact formatted kernel outputs") {
  const ValidatedParams p = ves::benchmark_case(1);
  const Grid grid{0.5, 8.0, 5, Spacing::Log};
  std::ostringstream via_grid;
  ves::emit_eval_csv(p, grid, via_grid);

  const std::vector<double> ks = ves::grid_points(grid);
  std::ostringstream via_span;
  ves::emit_eval_csv(p, ks, via_span);
  CHECK(via_grid.str() == via_span.str());

  std::istringstream lines(via_grid.str());
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "k,f,f_prime,f_double_prime,sigma,share");
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    const ves::EvalRow want = ves::eval_row(p, ks[rows]);
    const std::string expected =
        ves::format_double(want.k) + ',' + ves::format_double(want.f) + ',' +
        ves::format_double(want.f_prime) + ',' +
        ves::format_double(want.f_double_prime) + ',' +
        ves::format_double(want.sigma) + ',' + ves::format_double(want.share);
    CHECK(line == expected);
    ++rows;
  }
  CHECK(rows == ks.size());
}

TEST_CASE("elasticity tables") {
  const ValidatedParams p = ves::benchmark_case(2);
  std::ostringstream out;
  ves::emit_sigma_csv(p, Grid{1.0, 1.0, 1, Spacing::Log}, out);
  const std::string expected =
      "k,sigma\n1," + ves::format_double(ves::sigma_closed(p, 1.0)) + "\n";
  CHECK(out.str() == expected);
}

TEST_CASE("line charts are deterministic and carry every declared element") {
  ChartSpec spec;
  spec.x_label = "capital k";
  spec.y_label = "f & friends";  // exercises XML escaping
  spec.log_x = true;
  ChartSeries a{"model <f>", {0.01, 0.1, 1.0, 10.0, 100.0}, {1, 2, 3, 4, 5}};
  ChartSeries b{"limit", {0.01, 0.1, 1.0, 10.0, 100.0}, {1.5, 2.5, 3.5, 4.5, 5.5}};
  spec.series = {a, b};

  const std::string svg = ves::render_line_chart(spec);
  CHECK(svg == ves::render_line_chart(spec));  // byte-determinism
  CHECK(svg.find("<svg ") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") != std::string::npos);
  CHECK(svg.find("f &amp; friends") != std::string::npos);
  CHECK(svg.find("model &lt;f&gt;") != std::string::npos);
  CHECK(svg.find("capital k") != std::string::npos);
  CHECK(svg.find("#1f77b4") != std::string::npos);
  CHECK(svg.find("#d62728") != std::string::npos);
  std::size_t polylines = 0;
  for (std::size_t at = svg.find("<polyline"); at != std::string::npos;
       at = svg.find("<polyline", at + 1)) {
    ++polylines;
  }
  CHECK(polylines == 2);
  // log ticks are shown in data units
  CHECK(svg.find(">0.01<") != std::string::npos);
  CHECK(svg.find(">100<") != std::string::npos);
}

TEST_CASE("chart input validation") {
  CHECK_THROWS_AS((void)ves::render_line_chart(ChartSpec{}), ves::DomainError);

  ChartSpec mismatched;
  mismatched.series = {ChartSeries{"s", {1.0, 2.0}, {1.0}}};
  CHECK_THROWS_AS((void)ves::render_line_chart(mismatched), ves::DomainError);

  ChartSpec empty_series;
  empty_series.series = {ChartSeries{"s", {}, {}}};
  CHECK_THROWS_AS((void)ves::render_line_chart(empty_series), ves::DomainError);

  ChartSpec log_nonpos;
  log_nonpos.log_y = true;
  log_nonpos.series = {ChartSeries{"s", {1.0, 2.0}, {1.0, -1.0}}};
  CHECK_THROWS_AS((void)ves::render_line_chart(log_nonpos), ves::DomainError);

  ChartSpec with_nan;
  with_nan.series = {
      ChartSeries{"s", {1.0, 2.0}, {1.0, std::numeric_limits<double>::quiet_NaN()}}};
  CHECK_THROWS_AS((void)ves::render_line_chart(with_nan), ves::DomainError);

  // a flat series must still render (degenerate range is padded, not divided by)
  ChartSpec flat;
  flat.series = {ChartSeries{"s", {1.0, 2.0, 3.0}, {5.0, 5.0, 5.0}}};
  CHECK_NOTHROW((void)ves::render_line_chart(flat));
}

TEST_CASE("text files are written through fresh directories") {
  const auto dir = scratch_dir();
  const auto path = dir / "nested" / "deeper" / "out.txt";
  const std::string payload = "line one\nline two\n";
  ves::write_text_file(path.string(), payload);
  CHECK(slurp(path) == payload);

  // overwrite in place
  ves::write_text_file(path.string(), "shorter");
  CHECK(slurp(path) == "shorter");

  // a file where a directory is needed makes creation fail
  const auto blocker = dir / "blocker";
  ves::write_text_file(blocker.string(), "x");
  CHECK_THROWS_AS(
      ves::write_text_file((blocker / "sub" / "file.txt").string(), "x"),
      ves::DomainError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("parameter file the writer produced parses back verbatim") {
  const auto dir = scratch_dir();
  const RawParams p = ves::benchmark_case(2).raw();
  const std::string text = "A = " + ves::format_double(p.A) +
                           "\nalpha = " + ves::format_double(p.alpha) +
                           "\nbeta = " + ves::format_double(p.beta) +
                           "\ntheta = " + ves::format_double(p.theta) +
                           "\npsi = " + ves::format_double(p.psi) +
                           "\nomega = " + ves::format_double(p.omega) + "\n";
  const auto path = dir / "case2.params";
  ves::write_text_file(path.string(), text);
  const RawParams back = ves::read_params_file(path.string());
  CHECK(back.A == p.A);
  CHECK(back.alpha == p.alpha);
  CHECK(back.beta == p.beta);
  CHECK(back.theta == p.theta);
  CHECK(back.psi == p.psi);
  CHECK(back.omega == p.omega);
  std::filesystem::remove_all(dir);
}
