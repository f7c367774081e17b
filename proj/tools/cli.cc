// Copyright 2026 The spinphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinphase/errors.h"
#include "spinphase/parallel.h"
#include "spinphase/squeezing.h"
#include "spinphase/state_factory.h"
#include "spinphase/state_io.h"
#include "spinphase/wigner.h"

namespace spinphase::cli {
namespace {

using nlohmann::json;

int parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

double parse_real(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// A state as built for output, with the parameter that identifies it.
struct BuiltState {
  SpinState state;
  std::optional<double> param;
  std::string param_name;
};

BuiltState build(const StateKind& kind, SpinQuantum j) {
  switch (kind.tag) {
    case StateKind::Tag::kYurke:
      return {yurke_state(j, kind.alpha), kind.alpha, "alpha"};
    case StateKind::Tag::kTwoAxisEvolved:
      return {evolve_2act(j, kind.nu), kind.nu, "nu"};
    case StateKind::Tag::kSpinSqueezed2act:
    case StateKind::Tag::kPhaseSqueezed2act: {
      const TwoAxisTwist twist(j);
      const auto metric = kind.tag == StateKind::Tag::kSpinSqueezed2act ? TwistMetric::kXiSq
                                                                        : TwistMetric::kZetaSq;
      const double nu = minimize(twist, metric).nu_star;
      return {twist.evolve(nu), nu, "nu"};
    }
    default:
      return {make_state(kind, j), std::nullopt, ""};
  }
}

std::vector<std::string> default_states(const RunConfig& config,
                                        std::vector<std::string> fallback) {
  return config.states.empty() ? fallback : config.states;
}

// Writes to the --out file if given, else to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string fmt(double v) { return format_double(v); }

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : "undefined"; }

double zeta_sq_bound(SpinQuantum j) {
  return 2.0 * j.two_j() * (1.0 - std::cos(std::numbers::pi / (j.two_j() + 2.0)));
}

}  // namespace

std::vector<int> parse_n_list(std::string_view text) {
  std::vector<int> values;
  for (std::string_view token : split(text, ',')) {
    if (token.empty()) throw Error(ErrorCode::kParseError, "empty N entry");
    const auto dots = token.find("..");
    if (dots == std::string_view::npos) {
      values.push_back(parse_int(token));
      continue;
    }
    const int lo = parse_int(token.substr(0, dots));
    std::string_view rest = token.substr(dots + 2);
    int step = 1;
    if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
      step = parse_int(rest.substr(colon + 1));
      rest = rest.substr(0, colon);
    }
    const int hi = parse_int(rest);
    if (step < 1 || hi < lo) {
      throw Error(ErrorCode::kParseError, "bad N range '" + std::string(token) + "'");
    }
    for (int n = lo; n <= hi; n += step) values.push_back(n);
  }
  for (int n : values) {
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "N must be >= 1");
  }
  return values;
}

SweepRange parse_sweep(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) {
    throw Error(ErrorCode::kParseError, "sweep must be start:stop:count");
  }
  SweepRange range{parse_real(parts[0]), parse_real(parts[1]), parse_int(parts[2])};
  if (!(range.start >= 0.0) || !(range.stop > range.start) || range.count < 2) {
    throw Error(ErrorCode::kInvalidArgument, "sweep needs 0 <= start < stop and count >= 2");
  }
  return range;
}

void cmd_state(const RunConfig& config, std::ostream& out) {
  if (config.states.size() != 1 || config.n_values.size() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "state takes exactly one --state and one --n");
  }
  const StateKind kind = parse_state_kind(config.states.front(), config.alpha);
  const BuiltState built = build(kind, SpinQuantum(config.n_values.front()));
  StateParams params;
  if (built.param) params.emplace_back(built.param_name, *built.param);
  Sink sink(config.out, out);
  sink.get() << state_to_json(built.state, state_kind_name(kind.tag), params);
}

void cmd_metrics(const RunConfig& config, std::ostream& out) {
  if (config.format != "csv" && config.format != "json") {
    throw Error(ErrorCode::kInvalidArgument, "--format must be csv or json");
  }
  struct Job {
    std::string label;
    StateKind kind;
    int n;
  };
  std::vector<Job> jobs;
  for (const std::string& name : default_states(config, {"coherent", "optimal", "noon"})) {
    const StateKind kind = parse_state_kind(name, config.alpha);
    std::size_t added = 0;
    for (int n : config.n_values) {
      // Yurke states exist only for even N; odd N in a range are skipped.
      if (kind.tag == StateKind::Tag::kYurke && n % 2 != 0) continue;
      jobs.push_back({state_kind_name(kind.tag), kind, n});
      ++added;
    }
    if (added == 0) {
      throw Error(ErrorCode::kOddParticleNumber, "no even N given for '" + name + "'");
    }
  }

  struct Row {
    std::optional<double> param;
    SqueezingReport report;
  };
  std::vector<Row> rows(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const BuiltState built = build(jobs[i].kind, SpinQuantum(jobs[i].n));
    rows[i] = {built.param, squeezing_report(built.state)};
  });

  Sink sink(config.out, out);
  std::ostream& os = sink.get();
  if (config.format == "csv") {
    os << "state,N,param,xi_sq,xi_sq_opt,zeta_sq,zeta_sq_rc,sharpness,sharpness_mod,"
          "variance_approx,holevo_variance\n";
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      const SqueezingReport& r = rows[i].report;
      os << jobs[i].label << ',' << jobs[i].n << ',' << (rows[i].param ? fmt(*rows[i].param) : "")
         << ',' << fmt_opt(r.xi_sq) << ',' << fmt_opt(r.xi_sq_optimized) << ',' << fmt(r.zeta_sq)
         << ',' << fmt(r.zeta_sq_rc) << ',' << fmt(r.sharpness_re) << ','
         << fmt(r.sharpness_mod) << ',' << fmt(r.variance_approx) << ','
         << fmt(r.holevo_variance) << '\n';
    }
    return;
  }
  json doc = json::array();
  auto num = [](const std::optional<double>& v) -> json {
    if (!v || !std::isfinite(*v)) return nullptr;
    return *v;
  };
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const SqueezingReport& r = rows[i].report;
    doc.push_back({{"state", jobs[i].label},
                   {"N", jobs[i].n},
                   {"param", num(rows[i].param)},
                   {"mean_spin", {r.mean_spin.x(), r.mean_spin.y(), r.mean_spin.z()}},
                   {"xi_sq", num(r.xi_sq)},
                   {"xi_sq_opt", num(r.xi_sq_optimized)},
                   {"zeta_sq", r.zeta_sq},
                   {"zeta_sq_rc", r.zeta_sq_rc},
                   {"sharpness", r.sharpness_re},
                   {"sharpness_mod", r.sharpness_mod},
                   {"variance_approx", r.variance_approx},
                   {"holevo_variance", num(r.holevo_variance)}});
  }
  os << doc.dump(2) << '\n';
}

void cmd_twist(const RunConfig& config, std::ostream& out) {
  Sink sink(config.out, out);
  std::ostream& os = sink.get();

  if (config.sweep) {
    if (config.optimize || config.fit) {
      throw Error(ErrorCode::kInvalidArgument, "--sweep cannot be combined with --optimize/--fit");
    }
    if (config.n_values.size() != 1) {
      throw Error(ErrorCode::kInvalidArgument, "--sweep takes a single --n");
    }
    const SweepRange range = parse_sweep(*config.sweep);
    const SpinQuantum j(config.n_values.front());
    const TwoAxisTwist twist(j);
    const RealVector nu = RealVector::LinSpaced(range.count, range.start, range.stop);
    std::vector<SqueezingReport> reports(range.count);
    parallel_for(range.count, [&](std::size_t i) { reports[i] = squeezing_report(twist.evolve(nu(i))); });
    os << "nu,xi_sq,zeta_sq\n";
    for (int i = 0; i < range.count; ++i) {
      os << fmt(nu(i)) << ',' << fmt_opt(reports[i].xi_sq) << ',' << fmt(reports[i].zeta_sq)
         << '\n';
    }
    return;
  }

  if (config.fit) {
    const std::vector<TwistMetric> metrics =
        config.metric ? std::vector{*config.metric}
                      : std::vector{TwistMetric::kXiSq, TwistMetric::kZetaSq};
    os << "metric,coefficient,exploratory,N,nu_star,residual\n";
    for (TwistMetric metric : metrics) {
      const ScalingFit fit = scaling_fit(config.n_values, metric);
      for (std::size_t i = 0; i < fit.n_values.size(); ++i) {
        os << twist_metric_name(metric) << ',' << fmt(fit.coefficient) << ','
           << (fit.exploratory ? "true" : "false") << ',' << fit.n_values[i] << ','
           << fmt(fit.nu_star(i)) << ',' << fmt(fit.residuals(i)) << '\n';
      }
    }
    return;
  }

  if (!config.optimize) {
    throw Error(ErrorCode::kInvalidArgument, "twist needs --sweep, --optimize or --fit");
  }
  const std::size_t rows = config.n_values.size();
  if (config.metric) {
    std::vector<TwistOptimum> optima(rows);
    parallel_for(rows, [&](std::size_t i) {
      optima[i] = minimize(SpinQuantum(config.n_values[i]), *config.metric);
    });
    os << "N,metric,nu_star,value_at_star,bracket_lo,bracket_hi,iterations,zeta_sq_bound\n";
    for (std::size_t i = 0; i < rows; ++i) {
      const TwistOptimum& o = optima[i];
      os << config.n_values[i] << ',' << twist_metric_name(o.metric) << ',' << fmt(o.nu_star)
         << ',' << fmt(o.value_at_star) << ',' << fmt(o.bracket.first) << ','
         << fmt(o.bracket.second) << ',' << o.iterations << ','
         << fmt(zeta_sq_bound(SpinQuantum(config.n_values[i]))) << '\n';
    }
    return;
  }
  std::vector<std::pair<TwistOptimum, TwistOptimum>> optima(rows);
  parallel_for(rows, [&](std::size_t i) {
    const TwoAxisTwist twist(SpinQuantum(config.n_values[i]));
    optima[i] = {minimize(twist, TwistMetric::kXiSq), minimize(twist, TwistMetric::kZetaSq)};
  });
  os << "N,nu_ss,nu_ps,min_xi_sq,min_zeta_sq,zeta_sq_bound\n";
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& [ss, ps] = optima[i];
    os << config.n_values[i] << ',' << fmt(ss.nu_star) << ',' << fmt(ps.nu_star) << ','
       << fmt(ss.value_at_star) << ',' << fmt(ps.value_at_star) << ','
       << fmt(zeta_sq_bound(SpinQuantum(config.n_values[i]))) << '\n';
  }
}

std::vector<std::filesystem::path> cmd_panel(const RunConfig& config, std::ostream& out) {
  if (config.n_values.size() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "panel takes a single --n");
  }
  const SpinQuantum j(config.n_values.front());
  const std::filesystem::path dir =
      config.out.empty() ? std::filesystem::path("panel_N" + std::to_string(j.n_particles()))
                         : std::filesystem::path(config.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kInvalidArgument, "cannot create '" + dir.string() + "'");

  const int n_phi = config.wigner_phi > 0 ? config.wigner_phi : std::max(128, 2 * j.two_j() + 1);
  const int n_cos = config.wigner_costheta > 0 ? config.wigner_costheta : std::max(65, j.two_j() + 2);
  const int n_points = config.phase_points > 0 ? config.phase_points : default_phase_points(j);

  std::vector<std::filesystem::path> written;
  auto open = [&](const std::string& name) {
    const auto path = dir / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path.string() + "'");
    written.push_back(path);
    return f;
  };

  for (const std::string& name : default_states(config, {"coherent", "pss", "sss", "yurke", "noon"})) {
    const StateKind kind = parse_state_kind(name, config.alpha);
    std::string prefix = state_kind_name(kind.tag);
    if (kind.tag == StateKind::Tag::kTwoAxisEvolved) prefix += "-" + fmt(kind.nu);
    const SpinState state = build(kind, j).state;

    {
      const EqualAreaGrid grid = equal_area_grid(WignerFunction(state), n_phi, n_cos);
      auto f = open(prefix + "_wigner.csv");
      f << "phi,cos_theta,W\n";
      for (Eigen::Index r = 0; r < grid.costheta.size(); ++r) {
        for (Eigen::Index c = 0; c < grid.phi.size(); ++c) {
          f << fmt(grid.phi(c)) << ',' << fmt(grid.costheta(r)) << ',' << fmt(grid.values(r, c))
            << '\n';
        }
      }
    }
    {
      const PhaseDistribution dist = phase_distribution(state, 0.0, n_points);
      auto f = open(prefix + "_phase.csv");
      f << "phi,P\n";
      for (Eigen::Index k = 0; k < dist.phi_grid.size(); ++k) {
        f << fmt(dist.phi_grid(k)) << ',' << fmt(dist.density(k)) << '\n';
      }
      // closing endpoint so a plain trapezoid over the file integrates to one
      f << fmt(std::numbers::pi) << ',' << fmt(dist.density(0)) << '\n';
    }
    for (Axis axis : {Axis::kX, Axis::kY, Axis::kZ}) {
      const BasisCoefficients coeffs = basis_coefficients(state, axis);
      auto f = open(prefix + "_coeff_" + axis_name(axis) + ".csv");
      f << "mu,coeff\n";
      for (Eigen::Index k = 0; k < coeffs.mu.size(); ++k) {
        f << fmt(coeffs.mu(k)) << ',' << fmt(coeffs.coeff(k)) << '\n';
      }
    }
  }
  for (const auto& path : written) out << path.string() << '\n';
  return written;
}

void cmd_mixtures(const RunConfig& config, std::ostream& out) {
  if (config.count < 1) throw Error(ErrorCode::kInvalidArgument, "--count must be >= 1");
  Sink sink(config.out, out);
  std::ostream& os = sink.get();
  os << "N,sample,components,zeta_sq,zeta_sq_coherent\n";
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  std::uniform_int_distribution<int> components(1, 6);
  for (int n : config.n_values) {
    const SpinQuantum j(n);
    const SpinState coh = coherent_state(j);
    const double coh_zeta = zeta_squared(coh);
    for (int s = 0; s < config.count; ++s) {
      const int k = components(rng);
      std::vector<double> weights(k);
      std::vector<SpinState> states;
      states.reserve(k);
      for (int c = 0; c < k; ++c) {
        weights[c] = weight(rng);
        states.push_back(rotate_about_z(coh, angle(rng)));
      }
      const DensityMatrix rho = DensityMatrix::mixture(weights, states);
      os << n << ',' << s << ',' << k << ',' << fmt(zeta_squared(rho)) << ',' << fmt(coh_zeta)
         << '\n';
    }
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spin states for interferometric phase estimation"};
  app.require_subcommand(1);
  RunConfig config;
  std::string n_text;
  std::string states_text;
  std::string metric_text;
  std::string sweep_text;

  auto add_n = [&](CLI::App* sub, const std::string& help) {
    sub->add_option("--n", n_text, help);
  };

  CLI::App* state = app.add_subcommand("state", "Write one state as JSON");
  add_n(state, "Particle number N (default 20)");
  state->add_option("--state", states_text, "coherent|yurke|noon|optimal|twist(nu)|sss|pss")
      ->required();
  state->add_option("--alpha", config.alpha, "Yurke mixing angle (radians)");
  state->add_option("--out", config.out, "Output file (default stdout)");

  CLI::App* metrics = app.add_subcommand("metrics", "Figures of merit per state and N");
  add_n(metrics, "N list, e.g. 10 or 2..100 or 10..100:10");
  metrics->add_option("--states", states_text, "Comma-separated state list");
  metrics->add_option("--alpha", config.alpha, "Yurke mixing angle (radians)");
  metrics->add_option("--format", config.format, "csv or json");
  metrics->add_option("--out", config.out, "Output file (default stdout)");

  CLI::App* twist = app.add_subcommand("twist", "Two-axis counter-twisting sweeps and optima");
  add_n(twist, "N or N list");
  twist->add_option("--sweep", sweep_text, "start:stop:count uniform nu grid");
  twist->add_flag("--optimize", config.optimize, "Locate nu_ss and nu_ps");
  twist->add_flag("--fit", config.fit, "Fit nu* = c log2(N)/N");
  twist->add_option("--metric", metric_text, "xi or zeta");
  twist->add_option("--out", config.out, "Output file (default stdout)");

  CLI::App* panel = app.add_subcommand("panel", "Wigner, P(phi) and coefficient files per state");
  add_n(panel, "Particle number N (default 20)");
  panel->add_option("--states", states_text, "Comma-separated state list");
  panel->add_option("--alpha", config.alpha, "Yurke mixing angle (radians)");
  panel->add_option("--out", config.out, "Output directory");
  panel->add_option("--phase-points", config.phase_points, "P(phi) grid size");
  panel->add_option("--wigner-phi", config.wigner_phi, "Equal-area grid: phi points");
  panel->add_option("--wigner-costheta", config.wigner_costheta, "Equal-area grid: cos(theta) rows");

  CLI::App* mixtures = app.add_subcommand("mixtures", "zeta^2 of random coherent-state mixtures");
  add_n(mixtures, "N list");
  mixtures->add_option("--count", config.count, "Mixtures per N");
  mixtures->add_option("--seed", config.seed, "Random seed");
  mixtures->add_option("--out", config.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    CLI::App* chosen = app.get_subcommands().front();
    config.subcommand = chosen->get_name();
    if (!n_text.empty()) config.n_values = parse_n_list(n_text);
    if (!states_text.empty()) {
      config.states.clear();
      for (std::string_view s : split(states_text, ',')) config.states.emplace_back(s);
    }
    if (!metric_text.empty()) {
      if (metric_text == "xi") {
        config.metric = TwistMetric::kXiSq;
      } else if (metric_text == "zeta") {
        config.metric = TwistMetric::kZetaSq;
      } else {
        throw Error(ErrorCode::kInvalidArgument, "--metric must be xi or zeta");
      }
    }
    if (!sweep_text.empty()) config.sweep = sweep_text;

    if (config.subcommand == "state") cmd_state(config, out);
    if (config.subcommand == "metrics") cmd_metrics(config, out);
    if (config.subcommand == "twist") cmd_twist(config, out);
    if (config.subcommand == "panel") cmd_panel(config, out);
    if (config.subcommand == "mixtures") cmd_mixtures(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_numerical_failure(e.code()) ? kExitNumerical : kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace spinphase::cli
