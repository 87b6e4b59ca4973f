#include "ves/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ves/asymptotics.hpp"
#include "ves/calibrate.hpp"
#include "ves/elasticity.hpp"
#include "ves/errors.hpp"
#include "ves/eval.hpp"
#include "ves/figures.hpp"
#include "ves/grid.hpp"
#include "ves/io.hpp"
#include "ves/params.hpp"
#include "ves/scan.hpp"
#include "ves/verify.hpp"

namespace ves {
namespace {

// Parameter sources shared by the subcommands: a file, a bundled case, or all
// six inline flags; inline flags override individual fields of the former two.
struct ParamOpts {
  std::string file_path;
  int case_id = 0;
  std::optional<double> A, alpha, beta, theta, psi, omega;
};

void add_param_options(CLI::App* cmd, ParamOpts& o, const char* file_flag) {
  cmd->add_option(file_flag, o.file_path, "parameter file with key = value lines");
  cmd->add_option("--case", o.case_id, "bundled benchmark parameter set")
      ->check(CLI::Range(1, 2));
  cmd->add_option("--A", o.A, "scale A > 0");
  cmd->add_option("--alpha", o.alpha, "inner weight alpha > 0");
  cmd->add_option("--beta", o.beta, "inner weight beta > 0");
  cmd->add_option("--theta", o.theta, "direct capital exponent theta");
  cmd->add_option("--psi", o.psi, "inner curvature exponent psi");
  cmd->add_option("--omega", o.omega, "outer exponent omega");
}

RawParams resolve_params(const ParamOpts& o) {
  if (o.case_id != 0 && !o.file_path.empty()) {
    throw DomainError("give either a parameter file or --case, not both");
  }
  RawParams p;
  bool have_base = true;
  if (o.case_id != 0) {
    p = benchmark_case(o.case_id).raw();
  } else if (!o.file_path.empty()) {
    p = read_params_file(o.file_path);
  } else {
    have_base = false;
  }
  if (!have_base && !(o.A && o.alpha && o.beta && o.theta && o.psi && o.omega)) {
    throw DomainError(
        "no parameters: give a parameter file, --case, or all six of "
        "--A --alpha --beta --theta --psi --omega");
  }
  if (o.A) p.A = *o.A;
  if (o.alpha) p.alpha = *o.alpha;
  if (o.beta) p.beta = *o.beta;
  if (o.theta) p.theta = *o.theta;
  if (o.psi) p.psi = *o.psi;
  if (o.omega) p.omega = *o.omega;
  return p;
}

struct GridOpts {
  std::optional<std::string> k_list;
  std::optional<double> k_min, k_max;
  std::optional<int> points;
  bool linear = false;
};

void add_grid_options(CLI::App* cmd, GridOpts& g) {
  cmd->add_option("--k", g.k_list, "comma-separated k values");
  cmd->add_option("--kmin", g.k_min, "grid start (> 0)");
  cmd->add_option("--kmax", g.k_max, "grid end");
  cmd->add_option("--points", g.points, "number of grid points");
  cmd->add_flag("--linear", g.linear, "linear instead of log spacing");
}

std::vector<double> resolve_grid(const GridOpts& g) {
  if (g.k_list) {
    if (g.k_min || g.k_max || g.points || g.linear) {
      throw DomainError("--k excludes --kmin/--kmax/--points/--linear");
    }
    std::vector<double> ks;
    const std::string& text = *g.k_list;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      const std::string item = text.substr(pos, comma - pos);
      pos = comma + 1;
      if (item.empty()) throw DomainError("--k: empty entry in list");
      char* end = nullptr;
      const double v = std::strtod(item.c_str(), &end);
      if (end != item.c_str() + item.size()) {
        throw DomainError("--k: invalid number '" + item + "'");
      }
      if (!std::isfinite(v) || v <= 0.0) {
        throw DomainError("--k: values must be finite and > 0");
      }
      ks.push_back(v);
    }
    return ks;
  }
  if (!(g.k_min && g.k_max && g.points)) {
    throw DomainError("specify --k, or all of --kmin --kmax --points");
  }
  const Grid grid{*g.k_min, *g.k_max, *g.points,
                  g.linear ? Spacing::Linear : Spacing::Log};
  return grid_points(grid);
}

// Emits CSV either to a file (--out) or to the CLI output stream.
void deliver_csv(const std::string& out_path, const std::string& csv,
                 std::ostream& out) {
  if (out_path.empty()) {
    out << csv;
  } else {
    write_text_file(out_path, csv);
  }
}

const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

int run_validate(const ParamOpts& po, std::ostream& out) {
  const ValidationReport r = validate(resolve_params(po));
  out << "positive_scale=" << pass_fail(r.positive_scale) << '\n'
      << "positive_alpha=" << pass_fail(r.positive_alpha) << '\n'
      << "positive_beta=" << pass_fail(r.positive_beta) << '\n'
      << "theta_in_unit_interval=" << pass_fail(r.theta_in_unit_interval) << '\n'
      << "share_sum_in_unit_interval=" << pass_fail(r.share_sum_in_unit_interval)
      << '\n'
      << "psi_below_one=" << pass_fail(r.psi_below_one) << '\n'
      << "share_gain_in_unit_interval=" << pass_fail(r.share_gain_in_unit_interval)
      << '\n'
      << "overall=" << pass_fail(r.overall) << '\n';
  return r.overall ? 0 : 1;
}

int run_eval(const ParamOpts& po, const GridOpts& go, const std::string& out_path,
             std::ostream& out) {
  const ValidatedParams p = ValidatedParams::validated(resolve_params(po));
  const std::vector<double> ks = resolve_grid(go);
  std::ostringstream csv;
  emit_eval_csv(p, ks, csv);
  deliver_csv(out_path, csv.str(), out);
  return 0;
}

int run_sigma(const ParamOpts& po, const GridOpts& go, const std::string& out_path,
              std::ostream& out) {
  const ValidatedParams p = ValidatedParams::validated(resolve_params(po));
  const std::vector<double> ks = resolve_grid(go);
  std::ostringstream csv;
  emit_sigma_csv(p, ks, csv);
  deliver_csv(out_path, csv.str(), out);
  return 0;
}

int run_inada(const ParamOpts& po, const std::optional<double>& k_min,
              const std::optional<double>& k_max, std::ostream& out) {
  const ValidatedParams p = ValidatedParams::validated(resolve_params(po));
  ProbeConfig cfg;
  if (k_min) cfg.k_min = *k_min;
  if (k_max) cfg.k_max = *k_max;
  const InadaReport rep = check_inada(p, cfg);
  const auto verdict = [&out](const char* name, const Verdict& v) {
    out << name << '=' << pass_fail(v.pass) << '\n'
        << name << ".witness_k=" << format_double(v.witness_k) << '\n'
        << name << ".measured=" << format_double(v.measured) << '\n';
  };
  verdict("f_nonneg_and_zero_at_origin", rep.f_nonneg_and_zero_at_origin);
  verdict("f_increasing", rep.f_increasing);
  verdict("f_prime_diverges_at_zero", rep.f_prime_diverges_at_zero);
  verdict("f_prime_vanishes_at_infinity", rep.f_prime_vanishes_at_infinity);
  verdict("f_concave", rep.f_concave);
  verdict("f_diverges_at_infinity", rep.f_diverges_at_infinity);
  out << "share_limit_zero=" << format_double(rep.share_limit_zero) << '\n'
      << "share_limit_infinity=" << format_double(rep.share_limit_infinity) << '\n'
      << "slope_estimate_zero=" << format_double(rep.slope_estimate_zero) << '\n'
      << "slope_estimate_infinity=" << format_double(rep.slope_estimate_infinity)
      << '\n'
      << "grid=" << rep.grid_description << '\n'
      << "inada=" << pass_fail(rep.all_pass()) << '\n';
  return rep.all_pass() ? 0 : 1;
}

int run_asym(const ParamOpts& po, std::ostream& out) {
  const ValidatedParams p = ValidatedParams::validated(resolve_params(po));
  const AsymptoticSummary s = asymptotic_summary(p);
  out << "psi_positive=" << (s.psi_positive ? "true" : "false") << '\n'
      << "alpha_z=" << format_double(s.alpha_z) << '\n'
      << "beta_z=" << format_double(s.beta_z) << '\n'
      << "A_z=" << format_double(s.A_z) << '\n'
      << "B_z=" << format_double(s.B_z) << '\n'
      << "sigma_regime=" << to_string(classify_regime(p)) << '\n';
  for (const double k : {1e-2, 1e-3, 1e-4}) {
    out << "gap_zero@" << format_double(k) << '='
        << format_double(relative_gap(p, k, LimitEnd::Zero)) << '\n';
  }
  for (const double k : {1e2, 1e4, 1e6}) {
    out << "gap_infinity@" << format_double(k) << '='
        << format_double(relative_gap(p, k, LimitEnd::Infinity)) << '\n';
  }
  return 0;
}

int run_figures(int case_id, const std::string& outdir, std::ostream& out) {
  const FigureSpec spec{case_id};
  for (const std::string& path : emit_figures(spec, outdir)) {
    out << path << '\n';
  }
  return 0;
}

int run_fit(const std::string& data_path, const ParamOpts& init_opts,
            std::ostream& out) {
  const std::vector<Observation> data = read_observations_csv(data_path);
  const RawParams init = resolve_params(init_opts);
  const FitResult res = fit(data, init);
  const RawParams& p = res.params.raw();
  out << "A=" << format_double(p.A) << '\n'
      << "alpha=" << format_double(p.alpha) << '\n'
      << "beta=" << format_double(p.beta) << '\n'
      << "theta=" << format_double(p.theta) << '\n'
      << "psi=" << format_double(p.psi) << '\n'
      << "omega=" << format_double(p.omega) << '\n'
      << "rmse=" << format_double(res.rmse) << '\n'
      << "iterations=" << res.iterations << '\n'
      << "converged=" << (res.converged ? "true" : "false") << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"variable-elasticity production function toolkit", "ves"};
  app.require_subcommand(1);

  ParamOpts common_params;
  GridOpts grid_opts;
  std::string out_path;
  std::optional<double> inada_kmin, inada_kmax;
  int figures_case = 0;
  std::string figures_outdir;
  std::string fit_data;
  ParamOpts fit_init;

  CLI::App* c_validate =
      app.add_subcommand("validate", "check parameter feasibility");
  add_param_options(c_validate, common_params, "--params");

  CLI::App* c_eval =
      app.add_subcommand("eval", "tabulate f, derivatives, sigma, share as CSV");
  add_param_options(c_eval, common_params, "--params");
  add_grid_options(c_eval, grid_opts);
  c_eval->add_option("--out", out_path, "write CSV here instead of stdout");

  CLI::App* c_sigma =
      app.add_subcommand("sigma", "tabulate the elasticity of substitution as CSV");
  add_param_options(c_sigma, common_params, "--params");
  add_grid_options(c_sigma, grid_opts);
  c_sigma->add_option("--out", out_path, "write CSV here instead of stdout");

  CLI::App* c_inada =
      app.add_subcommand("inada", "probe the shape and limit conditions");
  add_param_options(c_inada, common_params, "--params");
  c_inada->add_option("--kmin", inada_kmin, "smallest probe (default 1e-8)");
  c_inada->add_option("--kmax", inada_kmax, "largest probe (default 1e8)");

  CLI::App* c_asym =
      app.add_subcommand("asym", "report power-law envelopes and convergence gaps");
  add_param_options(c_asym, common_params, "--params");

  CLI::App* c_figures =
      app.add_subcommand("figures", "render the bundled benchmark figures");
  c_figures->add_option("--case", figures_case, "benchmark parameter set")
      ->check(CLI::Range(1, 2))
      ->required();
  c_figures->add_option("--outdir", figures_outdir, "output directory")->required();

  CLI::App* c_fit = app.add_subcommand("fit", "least-squares fit to k,y data");
  c_fit->add_option("--data", fit_data, "CSV with header k,y")->required();
  add_param_options(c_fit, fit_init, "--init");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_validate)) return run_validate(common_params, out);
    if (app.got_subcommand(c_eval)) return run_eval(common_params, grid_opts, out_path, out);
    if (app.got_subcommand(c_sigma)) return run_sigma(common_params, grid_opts, out_path, out);
    if (app.got_subcommand(c_inada)) return run_inada(common_params, inada_kmin, inada_kmax, out);
    if (app.got_subcommand(c_asym)) return run_asym(common_params, out);
    if (app.got_subcommand(c_figures)) return run_figures(figures_case, figures_outdir, out);
    if (app.got_subcommand(c_fit)) return run_fit(fit_data, fit_init, out);
    err << "error: no subcommand selected\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace ves
