// Command-line surface: classification, sweeps, asymptotic fits, Schur
// verification, extremal probes, projection/Berezin evaluation, quadrature
// self-test. JSON config file with flag overrides; CSV output with '.'
// decimal, 12 significant digits, and a header comment echoing the resolved
// configuration and the quadrature descriptor. Exit codes: 0 success,
// 1 malformed config, 2 domain error, 3 accuracy error, 4 infeasibility.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frops/asymptotics.hpp"
#include "frops/criteria.hpp"
#include "frops/extremal.hpp"
#include "frops/mixed_norm.hpp"
#include "frops/operators.hpp"
#include "frops/quadrature.hpp"
#include "frops/schur.hpp"
#include "frops/special.hpp"

using nlohmann::json;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double as_exponent(const json& v, const std::string& field) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string() && (v.get<std::string>() == "inf" || v.get<std::string>() == "Infinity"))
    return frops::kInf;
  throw ConfigError("field '" + field + "' must be a number or \"inf\"");
}

frops::RealPair pair_of(const json& params, const std::string& key, bool exponent = false) {
  if (!params.contains(key))
    throw ConfigError("missing params field '" + key + "'");
  const json& v = params.at(key);
  if (!v.is_array() || v.size() != 2)
    throw ConfigError("params field '" + key + "' must be an array of two entries");
  if (exponent) return {as_exponent(v[0], key), as_exponent(v[1], key)};
  if (!v[0].is_number() || !v[1].is_number())
    throw ConfigError("params field '" + key + "' must hold numbers");
  return {v[0].get<double>(), v[1].get<double>()};
}

frops::OperatorParams parse_params(const json& params) {
  if (!params.is_object()) throw ConfigError("'params' must be an object");
  const int n = params.contains("n") ? params.at("n").get<int>() : 1;
  const auto a = pair_of(params, "a");
  const auto b = pair_of(params, "b");
  const auto c = pair_of(params, "c");
  const auto alpha = pair_of(params, "alpha");
  const auto beta = pair_of(params, "beta");
  const auto p = pair_of(params, "p", true);
  const auto q = pair_of(params, "q", true);
  return frops::OperatorParams(n, a, b, c,
                               frops::WeightPair{alpha[0], alpha[1]},
                               frops::WeightPair{beta[0], beta[1]},
                               frops::ExponentPair{p[0], p[1]},
                               frops::ExponentPair{q[0], q[1]});
}

struct QuadOpts {
  int n_radial = 96;
  int n_angular = 192;
  std::uint64_t seed = 1;
  std::int64_t samples = 200000;
};

QuadOpts parse_quad(const json& cfg) {
  QuadOpts opts;
  if (!cfg.contains("quadrature")) return opts;
  const json& q = cfg.at("quadrature");
  if (!q.is_object()) throw ConfigError("'quadrature' must be an object");
  if (q.contains("n_radial")) opts.n_radial = q.at("n_radial").get<int>();
  if (q.contains("n_angular")) opts.n_angular = q.at("n_angular").get<int>();
  if (q.contains("seed")) opts.seed = q.at("seed").get<std::uint64_t>();
  if (q.contains("samples")) opts.samples = q.at("samples").get<std::int64_t>();
  return opts;
}

frops::QuadratureRule make_rule(int n, double theta, const QuadOpts& opts) {
  if (n == 1) return frops::build_disc_rule(opts.n_radial, opts.n_angular, theta);
  frops::MonteCarloConfig mc;
  mc.sample_count = opts.samples;
  mc.seed = opts.seed;
  return frops::build_ball_rule(n, mc, theta);
}

json quad_json(const QuadOpts& opts) {
  return json{{"n_radial", opts.n_radial},
              {"n_angular", opts.n_angular},
              {"seed", opts.seed},
              {"samples", opts.samples}};
}

// Accumulates header comments and rows, then writes the artifact once.
class CsvWriter {
 public:
  void header(const std::string& line) { headers_.push_back(line); }
  void columns(const std::vector<std::string>& names) {
    rows_.push_back(join(names));
  }
  void row(const std::vector<std::string>& cells) { rows_.push_back(join(cells)); }

  void write(const std::string& path) const {
    std::ostringstream out;
    for (const auto& h : headers_) out << "# " << h << "\n";
    for (const auto& r : rows_) out << r << "\n";
    emit(path, out.str());
  }

  static void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output path '" + path + "'");
    f << text;
  }

 private:
  static std::string join(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) line += ",";
      line += cells[i];
    }
    return line;
  }
  std::vector<std::string> headers_;
  std::vector<std::string> rows_;
};

std::string output_path(const json& cfg) {
  if (!cfg.contains("output")) return "-";
  const json& o = cfg.at("output");
  if (o.is_string()) return o.get<std::string>();
  if (o.is_object() && o.contains("path")) return o.at("path").get<std::string>();
  return "-";
}

json checks_json(const std::vector<frops::InequalityCheck>& checks) {
  json arr = json::array();
  for (const auto& ck : checks) {
    const char* rel = ck.relation == frops::Relation::less_than   ? "<"
                      : ck.relation == frops::Relation::less_equal ? "<="
                                                                   : "=";
    arr.push_back(json{{"id", ck.id},
                       {"lhs", ck.lhs},
                       {"rhs", ck.rhs},
                       {"relation", rel},
                       {"holds", ck.holds}});
  }
  return arr;
}

// ---------------------------------------------------------------------------

int run_classify(const json& cfg) {
  const auto params = parse_params(cfg.at("params"));
  const auto result = frops::classify(params);
  json out{{"bounded", result.bounded},
           {"condition_case", frops::to_string(result.condition_case)},
           {"satisfied_branch", result.satisfied_branch},
           {"failures", checks_json(result.failures)},
           {"config", cfg}};
  CsvWriter::emit(output_path(cfg), out.dump(2) + "\n");
  return 0;
}

const std::map<std::string, std::pair<std::string, int>>& axis_table() {
  static const std::map<std::string, std::pair<std::string, int>> table{
      {"a1", {"a", 0}},     {"a2", {"a", 1}},     {"b1", {"b", 0}},
      {"b2", {"b", 1}},     {"c1", {"c", 0}},     {"c2", {"c", 1}},
      {"alpha1", {"alpha", 0}}, {"alpha2", {"alpha", 1}},
      {"beta1", {"beta", 0}},   {"beta2", {"beta", 1}},
      {"p1", {"p", 0}},     {"p2", {"p", 1}},     {"q1", {"q", 0}},
      {"q2", {"q", 1}}};
  return table;
}

struct SweepAxis {
  std::string name;
  double start = 0.0, stop = 0.0, step = 1.0;
  std::vector<double> values() const {
    std::vector<double> v;
    // Half-step slack so the endpoint survives round-off.
    for (double x = start; x <= stop + 0.5 * step; x += step) v.push_back(x);
    return v;
  }
};

SweepAxis parse_axis(const json& spec) {
  SweepAxis ax;
  for (const char* k : {"axis", "start", "stop", "step"})
    if (!spec.contains(k)) throw ConfigError(std::string("sweep axis missing '") + k + "'");
  ax.name = spec.at("axis").get<std::string>();
  if (!axis_table().count(ax.name))
    throw ConfigError("unknown sweep axis '" + ax.name + "'");
  ax.start = spec.at("start").get<double>();
  ax.stop = spec.at("stop").get<double>();
  ax.step = spec.at("step").get<double>();
  if (!(ax.step > 0.0)) throw ConfigError("sweep step must be positive");
  return ax;
}

int run_sweep(const json& cfg) {
  if (!cfg.contains("sweep")) throw ConfigError("sweep command needs a 'sweep' block");
  const json& sw = cfg.at("sweep");
  std::vector<SweepAxis> axes;
  if (sw.is_array()) {
    for (const auto& s : sw) axes.push_back(parse_axis(s));
  } else {
    axes.push_back(parse_axis(sw));
  }
  if (axes.empty() || axes.size() > 2)
    throw ConfigError("sweep supports one or two axes");

  CsvWriter csv;
  csv.header("config " + cfg.dump());
  std::vector<std::string> cols;
  for (const auto& ax : axes) cols.push_back(ax.name);
  cols.push_back("bounded");
  cols.push_back("failing_inequality");
  csv.columns(cols);

  auto classify_at = [&](const std::vector<double>& vals, std::vector<std::string>& out_row) {
    json params = cfg.at("params");
    for (std::size_t i = 0; i < axes.size(); ++i) {
      const auto& [key, idx] = axis_table().at(axes[i].name);
      params[key][idx] = vals[i];
      out_row.push_back(fmt12(vals[i]));
    }
    const auto result = frops::classify(parse_params(params));
    out_row.push_back(result.bounded ? "1" : "0");
    out_row.push_back(result.failures.empty() ? "" : result.failures.front().id);
  };

  const auto v1 = axes[0].values();
  if (axes.size() == 1) {
    for (double x : v1) {
      std::vector<std::string> row;
      classify_at({x}, row);
      csv.row(row);
    }
  } else {
    const auto v2 = axes[1].values();
    for (double x : v1)
      for (double y : v2) {
        std::vector<std::string> row;
        classify_at({x, y}, row);
        csv.row(row);
      }
  }
  csv.write(output_path(cfg));
  return 0;
}

int run_asymptotic(const json& cfg) {
  if (!cfg.contains("asymptotic"))
    throw ConfigError("asymptotic command needs an 'asymptotic' block");
  const json& blk = cfg.at("asymptotic");
  if (!blk.contains("c")) throw ConfigError("asymptotic block missing 'c'");
  const double c = blk.at("c").get<double>();
  const double t = blk.contains("t") ? blk.at("t").get<double>() : 0.0;
  const int n = blk.contains("n") ? blk.at("n").get<int>() : 1;
  const QuadOpts opts = parse_quad(cfg);

  const auto radii = frops::default_radius_schedule();
  const frops::QuadratureRule fallback = make_rule(n, 0.0, opts);

  CsvWriter csv;
  csv.header("config " + cfg.dump());
  csv.header("rule " + fallback.descriptor());
  csv.columns({"one_minus_r2", "I_value", "refined_flag"});
  for (double r : radii) {
    double value;
    int refined = 1;
    if (n == 1) {
      value = frops::eval_I_refined(r, c, t, n, 1e-4, opts.n_radial, opts.n_angular);
    } else {
      value = frops::eval_I(frops::BallPoint::axial(n, r), c, t, fallback);
      refined = 0;
    }
    csv.row({fmt12(1.0 - r * r), fmt12(value), std::to_string(refined)});
  }
  csv.write(output_path(cfg));
  return 0;
}

int run_schur_verify(const json& cfg) {
  const auto params = parse_params(cfg.at("params"));
  const QuadOpts opts = parse_quad(cfg);
  const auto weights = frops::construct_weights(params);

  const frops::ProductRule rule{make_rule(params.n, 0.0, opts),
                                make_rule(params.n, 0.0, opts)};
  CsvWriter csv;
  csv.header("config " + cfg.dump());
  csv.header("rule " + rule.rule_z.descriptor());
  csv.header("weights " + json{{"lambda", weights.lambda},
                               {"tau", weights.tau},
                               {"r", weights.r},
                               {"s", weights.s},
                               {"gamma", weights.gamma},
                               {"delta", weights.delta},
                               {"beta_eff", weights.beta_eff}}
                              .dump());
  csv.columns({"radius", "ratio_1", "ratio_2"});
  // Graded radii up to 0.99: deeper shells would need far more angular
  // resolution than the default rule provides.
  for (double r : {0.9, 0.95, 0.98, 0.99}) {
    const frops::ProductPoint pt{frops::BallPoint::axial(params.n, r),
                                 frops::BallPoint::axial(params.n, r)};
    const double r1 = frops::verify_schur_first(weights, params, {pt}, rule);
    const double r2 = frops::verify_schur_second(weights, params, {pt}, rule);
    csv.row({fmt12(r), fmt12(r1), fmt12(r2)});
  }
  csv.write(output_path(cfg));
  return 0;
}

int run_extremal(const json& cfg) {
  const auto params = parse_params(cfg.at("params"));
  const QuadOpts opts = parse_quad(cfg);
  std::string mode = "necessity";
  if (cfg.contains("extremal") && cfg.at("extremal").contains("mode"))
    mode = cfg.at("extremal").at("mode").get<std::string>();

  const frops::ProductRule rule{make_rule(params.n, 0.0, opts),
                                make_rule(params.n, 0.0, opts)};
  const auto radii = frops::default_radius_schedule();

  CsvWriter csv;
  csv.header("config " + cfg.dump());
  csv.header("rule " + rule.rule_z.descriptor());
  csv.columns({"radius", "family_norm", "T_norm", "ratio"});
  if (mode == "necessity") {
    const auto curve = frops::necessity_ratio_curve(params, radii, rule);
    for (const auto& [r, ratio] : curve) {
      const frops::BallPoint anchor = frops::BallPoint::axial(params.n, r);
      const auto fam = frops::make_kernel_family(params, anchor, anchor);
      const double fn = frops::family_mixed_norm(fam, params.p, params.alpha, rule);
      csv.row({fmt12(r), fmt12(fn), fmt12(ratio * fn), fmt12(ratio)});
    }
  } else if (mode == "log") {
    const auto report = frops::log_blowup_probe(params, radii, rule);
    for (std::size_t i = 0; i < report.radii.size(); ++i) {
      const double fn = report.family_norms[i];
      const double in = report.image_norms[i];
      csv.row({fmt12(report.radii[i]), fmt12(fn), fmt12(in), fmt12(in / fn)});
    }
  } else {
    throw ConfigError("extremal mode must be 'necessity' or 'log'");
  }
  csv.write(output_path(cfg));
  return 0;
}

std::vector<std::array<double, 2>> parse_points(const json& blk) {
  std::vector<std::array<double, 2>> pts{{0.0, 0.0}, {0.3, 0.0}, {0.0, 0.5},
                                         {0.6, 0.2}, {0.95, 0.4}};
  if (!blk.contains("points")) return pts;
  pts.clear();
  for (const auto& p : blk.at("points")) {
    if (!p.is_array() || p.size() != 2)
      throw ConfigError("'points' entries must be [r1, r2] pairs");
    pts.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return pts;
}

int run_kernel_transform(const json& cfg, bool projection) {
  const char* name = projection ? "project" : "berezin";
  if (!cfg.contains(name))
    throw ConfigError(std::string(name) + " command needs a '" + name + "' block");
  const json& blk = cfg.at(name);
  const auto gamma = pair_of(blk, "gamma");
  const int n = blk.contains("n") ? blk.at("n").get<int>() : 1;
  int j = 0, k = 0;
  if (blk.contains("monomial")) {
    j = blk.at("monomial")[0].get<int>();
    k = blk.at("monomial")[1].get<int>();
  }
  const QuadOpts opts = parse_quad(cfg);
  const frops::ProductRule rule{make_rule(n, gamma[0], opts),
                                make_rule(n, gamma[1], opts)};

  const frops::Bivariate f = [j, k](const frops::BallPoint& z, const frops::BallPoint& w) {
    return std::pow(z[0], j) * std::pow(w[0], k);
  };

  CsvWriter csv;
  csv.header("config " + cfg.dump());
  csv.header("rule " + rule.rule_z.descriptor());
  csv.columns({"r1", "r2", "value_re", "value_im"});
  for (const auto& pt : parse_points(blk)) {
    const frops::ProductPoint at{frops::BallPoint::axial(n, pt[0]),
                                 frops::BallPoint::axial(n, pt[1])};
    const frops::complex_t v = projection
                                   ? frops::bergman_project(f, gamma, at, rule)
                                   : frops::berezin_transform(f, gamma, at, rule);
    csv.row({fmt12(pt[0]), fmt12(pt[1]), fmt12(v.real()), fmt12(v.imag())});
  }
  csv.write(output_path(cfg));
  return 0;
}

int run_quad_selftest(const json& cfg) {
  const QuadOpts opts = parse_quad(cfg);
  CsvWriter csv;
  csv.header("config " + cfg.dump());
  csv.columns({"check", "value", "target", "tolerance", "status"});
  bool all_pass = true;

  auto record = [&](const std::string& name, double value, double target, double tol) {
    const bool ok = std::abs(value - target) <= tol;
    all_pass = all_pass && ok;
    csv.row({name, fmt12(value), fmt12(target), fmt12(tol), ok ? "pass" : "fail"});
  };

  for (double theta : {-0.5, 0.0, 1.0, 2.5}) {
    const auto rule = frops::build_disc_rule(opts.n_radial, opts.n_angular, theta);
    const double mass = frops::integrate_real([](const frops::BallPoint&) { return 1.0; }, rule);
    record("disc_mass_theta_" + fmt12(theta), mass, 1.0, 1e-10);
  }
  {
    // Radial moment on the disc: int |z|^2 dv = n/(n+1) = 1/2.
    const auto rule = frops::build_disc_rule(opts.n_radial, opts.n_angular, 0.0);
    const double m2 =
        frops::integrate_real([](const frops::BallPoint& z) { return z.norm_sq(); }, rule);
    record("disc_second_moment", m2, 0.5, 1e-10);
  }
  {
    frops::MonteCarloConfig mc;
    mc.sample_count = opts.samples;
    mc.seed = opts.seed;
    const auto rule = frops::build_ball_rule(2, mc, 0.0);
    const double mass = frops::integrate_real([](const frops::BallPoint&) { return 1.0; }, rule);
    record("ball2_mass", mass, 1.0, std::max(4.0 * rule.sigma_scale(), 1e-10));
  }
  csv.write(output_path(cfg));
  if (!all_pass) throw frops::AccuracyError("quadrature self-test failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for two-factor integral operators on the bidisc/biball"};
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string output_override;
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--output", output_override, "output path ('-' for stdout)");

  std::map<std::string, std::string> command_of;
  for (const char* name : {"classify", "sweep", "asymptotic", "schur-verify",
                           "extremal", "project", "berezin", "quad-selftest"}) {
    CLI::App* sub = app.add_subcommand(name, name);
    sub->fallthrough();  // let --config/--output/overrides follow the subcommand
    sub->callback([&command_of, name]() { command_of["cmd"] = name; });
  }

  // Scalar overrides applied on top of the config file.
  std::map<std::string, std::optional<double>> overrides;
  for (const auto& [flag, _] : axis_table())
    app.add_option("--" + flag, overrides[flag], "override params." + flag);
  std::optional<int> n_override;
  std::optional<std::uint64_t> seed_override;
  app.add_option("--n", n_override, "override params.n");
  app.add_option("--seed", seed_override, "override quadrature.seed");

  CLI11_PARSE(app, argc, argv);

  try {
    json cfg = json::object();
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw ConfigError("cannot read config file '" + config_path + "'");
      try {
        f >> cfg;
      } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid JSON in config: ") + e.what());
      }
    }
    if (command_of.count("cmd")) cfg["command"] = command_of["cmd"];
    if (!output_override.empty()) cfg["output"] = output_override;
    for (const auto& [flag, value] : overrides) {
      if (!value) continue;
      const auto& [key, idx] = axis_table().at(flag);
      if (!cfg.contains("params")) cfg["params"] = json::object();
      if (!cfg["params"].contains(key)) cfg["params"][key] = json{0.0, 0.0};
      cfg["params"][key][idx] = *value;
    }
    if (n_override) cfg["params"]["n"] = *n_override;
    if (seed_override) cfg["quadrature"]["seed"] = *seed_override;

    if (!cfg.contains("command"))
      throw ConfigError("no command given (subcommand or config field 'command')");
    const std::string cmd = cfg.at("command").get<std::string>();

    if (cmd == "classify") return run_classify(cfg);
    if (cmd == "sweep") return run_sweep(cfg);
    if (cmd == "asymptotic") return run_asymptotic(cfg);
    if (cmd == "schur-verify") return run_schur_verify(cfg);
    if (cmd == "extremal") return run_extremal(cfg);
    if (cmd == "project") return run_kernel_transform(cfg, true);
    if (cmd == "berezin") return run_kernel_transform(cfg, false);
    if (cmd == "quad-selftest") return run_quad_selftest(cfg);
    throw ConfigError("unknown command '" + cmd + "'");
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const frops::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 4;
  } catch (const frops::AccuracyError& e) {
    std::cerr << "accuracy error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
