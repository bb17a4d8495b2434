/**
 * Copyright 2026 The biqutrit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "biqutrit/biphoton.hpp"
#include "biqutrit/catalog.hpp"
#include "biqutrit/orthogonality.hpp"
#include "biqutrit/serialization.hpp"

namespace biqutrit::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& token) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + token + "'");
  }
  if (used != token.size()) throw UsageError("not a number: '" + token + "'");
  return value;
}

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

// A single-photon state given as a named state, a city (globe mode),
// "theta,phi" (sphere mode) or "lat,lon" (globe mode).
PoincarePoint parse_point(const std::string& token, bool globe) {
  if (const auto state = named_state(token)) return poincare_from_jones(*state);
  if (globe) {
    if (const auto city = find_city(token)) return globe_to_poincare(*city);
  }
  const auto parts = split(token, ',');
  if (parts.size() != 2) {
    throw UsageError("cannot parse point '" + token + "'; expected a named state" +
                     std::string(globe ? ", a city" : "") +
                     (globe ? " or lat,lon" : " or theta,phi"));
  }
  const double x = parse_double(parts[0]);
  const double y = parse_double(parts[1]);
  if (globe) {
    if (x < -90.0 || x > 90.0) throw UsageError("latitude out of range in '" + token + "'");
    return globe_to_poincare({x, y});
  }
  if (x < 0.0 || x > 180.0) throw UsageError("theta out of range in '" + token + "'");
  return PoincarePoint{x, y}.normalized();
}

std::string resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p.string();
}

void emit(const RunConfig& config, const std::string& payload, std::ostream& out) {
  if (config.output.empty()) {
    out << payload;
    return;
  }
  const std::string path = resolve_output(config.output);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << payload;
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

json point_json(const PoincarePoint& p) {
  return json{{"sphere", p}, {"globe", poincare_to_globe(p)}};
}

std::string point_text(const PoincarePoint& p) {
  return "sphere " + to_string(p) + "  globe " + to_string(poincare_to_globe(p));
}

BiphotonQutrit state_of(const RunConfig& c) {
  if (c.amplitudes.has_value() == c.chi.has_value()) {
    throw UsageError("state: give exactly one of --chi/--dphi or --c");
  }
  if (c.amplitudes) {
    const auto& a = *c.amplitudes;
    try {
      return {a[0], a[1], a[2]};
    } catch (const std::invalid_argument&) {
      throw UsageError("state: amplitudes cannot be normalized");
    }
  }
  return source_state({*c.chi, c.dphi.value_or(180.0)});
}

int cmd_state(const RunConfig& c, std::ostream& out) {
  const BiphotonQutrit s = state_of(c);
  const PairDecomposition halves = factor_qutrit(s);
  const StokesVector stokes = stokes_expectation(s);
  const double p = polarization_degree(s);
  const double sigma = subtense_angle(s);

  std::ostringstream os;
  if (c.format == "json") {
    json j{{"qutrit", s},
           {"d1", s.d1()},
           {"d3", s.d3()},
           {"halves", json::array({point_json(halves.p), point_json(halves.q)})},
           {"stokes", stokes},
           {"polarization_degree", p},
           {"subtense_angle", sigma}};
    os << j.dump(2) << '\n';
  } else {
    os << "qutrit  " << to_string(s) << '\n';
    os << "d1      " << fmt("%.9f", s.d1()) << '\n';
    os << "d3      " << fmt("%.9f", s.d3()) << '\n';
    if (s.d3() > 0.0) os << "d1^2/d3^2  " << fmt("%.9g", s.d1() * s.d1() / (s.d3() * s.d3())) << '\n';
    os << "half 1  " << point_text(halves.p) << '\n';
    os << "half 2  " << point_text(halves.q) << '\n';
    os << "stokes  " << to_string(stokes) << '\n';
    os << "P       " << fmt("%.9f", p) << '\n';
    os << "sigma   " << fmt("%.6f", sigma) << " deg\n";
  }
  emit(c, os.str(), out);
  return kOk;
}

int cmd_partner(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.points.size() != 3) throw UsageError("partner: expected exactly three points a b c");
  const PoincarePoint a = parse_point(c.points[0], c.globe);
  const PoincarePoint b = parse_point(c.points[1], c.globe);
  const PoincarePoint cc = parse_point(c.points[2], c.globe);
  PoincarePoint d;
  try {
    d = orthogonal_partner(a, b, cc);
  } catch (const AnyPartnerError&) {
    err << "degenerate: c is orthogonal to both a and b; every polarization d is a partner\n";
    return kDegenerate;
  }
  const double residual =
      std::abs(pair_amplitude(jones_from_poincare(cc), jones_from_poincare(d),
                              jones_from_poincare(a), jones_from_poincare(b)));
  std::ostringstream os;
  if (c.format == "json") {
    json j{{"a", point_json(a)}, {"b", point_json(b)}, {"c", point_json(cc)},
           {"d", point_json(d)}, {"residual", residual}};
    os << j.dump(2) << '\n';
  } else {
    os << "a         " << point_text(a) << '\n';
    os << "b         " << point_text(b) << '\n';
    os << "c         " << point_text(cc) << '\n';
    os << "d         " << point_text(d) << '\n';
    const StokesVector sd = stokes_from_poincare(d);
    if (std::abs(sd.s3) < 1e-12) {
      os << "d linear  " << fmt("%.6f", 0.5 * to_degrees(std::atan2(sd.s2, sd.s1))) << " deg\n";
    }
    os << "residual  " << fmt("%.3e", residual) << '\n';
  }
  emit(c, os.str(), out);
  return kOk;
}

int cmd_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const bool chi_sweep = c.kind == "chi";
  if (!chi_sweep && c.kind != "polarizer") throw UsageError("sweep: kind must be chi or polarizer");
  if (c.which != 1 && c.which != 2) throw UsageError("sweep: --which must be 1 or 2");
  const double dphi = c.dphi.value_or(180.0);
  const double from = c.from.value_or(chi_sweep ? 0.0 : -90.0);
  const double to = c.to.value_or(90.0);

  std::vector<double> grid;
  try {
    grid = make_grid(from, to, c.step);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  SweepResult result;
  if (chi_sweep) {
    result = sweep_chi(c.z1, c.z2, dphi, c.model, grid);
  } else {
    const bool first = c.which == 1;
    result = sweep_filter(c.chi.value_or(30.0), dphi, first ? Polarizer::kP1 : Polarizer::kP2,
                          first ? c.z2 : c.z1, c.model, grid);
  }

  std::ostringstream os;
  const bool as_json = c.format == "json";
  if (c.seed) {
    const CountSweep counts = simulate_counts(result, {c.duration, *c.seed, c.drift});
    if (as_json) {
      os << json(counts).dump(2) << '\n';
    } else {
      write_csv(os, counts);
    }
  } else if (as_json) {
    os << json(result).dump(2) << '\n';
  } else {
    write_csv(os, result);
  }
  emit(c, os.str(), out);

  const SweepRow& best = result.min_g2_row();
  std::ostream& summary = c.output.empty() ? err : out;
  summary << "argmin " << result.parameter << " = " << fmt("%.3f", best.param)
          << " deg, min g2 = " << fmt("%.9f", best.g2) << '\n';
  return kOk;
}

}  // namespace

Complex parse_complex(const std::string& token) {
  const auto parts = split(token, ':');
  if (parts.size() == 1) return {parse_double(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_double(parts[0]), parse_double(parts[1])};
  throw UsageError("cannot parse amplitude '" + token + "'; expected re or re:im");
}

void to_json(json& j, const RunConfig& c) {
  j = json{{"command", c.command}};
  if (c.chi) j["chi"] = *c.chi;
  if (c.dphi) j["dphi"] = *c.dphi;
  if (c.amplitudes) {
    j["c"] = json::array();
    for (const Complex& a : *c.amplitudes) j["c"].push_back(complex_to_json(a));
  }
  if (c.command == "partner") {
    j["points"] = c.points;
    j["globe"] = c.globe;
  }
  if (c.command == "sweep") {
    j["kind"] = c.kind;
    j["z1"] = c.z1;
    j["z2"] = c.z2;
    j["which"] = c.which;
    if (c.from) j["from"] = *c.from;
    if (c.to) j["to"] = *c.to;
    j["step"] = c.step;
    if (c.seed) j["seed"] = *c.seed;
    j["duration"] = c.duration;
    j["drift"] = c.drift;
    j["pair-rate"] = c.model.pair_rate;
    j["eta1"] = c.model.eta1;
    j["eta2"] = c.model.eta2;
    j["tc"] = c.model.coincidence_window;
    j["bg1"] = c.model.background1;
    j["bg2"] = c.model.background2;
  }
  if (!c.format.empty()) j["format"] = c.format;
  if (!c.output.empty()) j["output"] = c.output;
}

void from_json(const json& j, RunConfig& c) {
  c = RunConfig{};
  c.command = j.at("command").get<std::string>();
  if (j.contains("chi")) c.chi = j.at("chi").get<double>();
  if (j.contains("dphi")) c.dphi = j.at("dphi").get<double>();
  if (j.contains("c")) {
    const json& arr = j.at("c");
    if (!arr.is_array() || arr.size() != 3) throw UsageError("config: c must hold three amplitudes");
    c.amplitudes = std::array<Complex, 3>{complex_from_json(arr[0]), complex_from_json(arr[1]),
                                          complex_from_json(arr[2])};
  }
  c.points = j.value("points", c.points);
  c.globe = j.value("globe", c.globe);
  c.kind = j.value("kind", c.kind);
  c.z1 = j.value("z1", c.z1);
  c.z2 = j.value("z2", c.z2);
  c.which = j.value("which", c.which);
  if (j.contains("from")) c.from = j.at("from").get<double>();
  if (j.contains("to")) c.to = j.at("to").get<double>();
  c.step = j.value("step", c.step);
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  c.duration = j.value("duration", c.duration);
  c.drift = j.value("drift", c.drift);
  c.model.pair_rate = j.value("pair-rate", c.model.pair_rate);
  c.model.eta1 = j.value("eta1", c.model.eta1);
  c.model.eta2 = j.value("eta2", c.model.eta2);
  c.model.coincidence_window = j.value("tc", c.model.coincidence_window);
  c.model.background1 = j.value("bg1", c.model.background1);
  c.model.background2 = j.value("bg2", c.model.background2);
  c.format = j.value("format", c.format);
  c.output = j.value("output", c.output);
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "state") {
      if (!config.format.empty() && config.format != "text" && config.format != "json") {
        throw UsageError("state: format must be text or json");
      }
      return cmd_state(config, out);
    }
    if (config.command == "partner") {
      if (!config.format.empty() && config.format != "text" && config.format != "json") {
        throw UsageError("partner: format must be text or json");
      }
      return cmd_partner(config, out, err);
    }
    if (config.command == "sweep") {
      if (!config.format.empty() && config.format != "csv" && config.format != "json") {
        throw UsageError("sweep: format must be csv or json");
      }
      return cmd_sweep(config, out, err);
    }
    throw UsageError("unknown command '" + config.command + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polarization qutrits of biphotons: orthogonality and the anticorrelation dip",
               "biqutrit"};
  app.require_subcommand(1);
  std::string save_config;
  app.add_option("--save-config", save_config, "Write the run configuration as JSON before running");

  RunConfig cfg;
  double chi = 0.0, dphi = 180.0;
  std::string amplitudes;
  std::uint64_t seed = 0;
  double from = 0.0, to = 0.0;

  auto* state = app.add_subcommand("state", "Describe a biphoton polarization state");
  auto* state_chi = state->add_option("--chi", chi, "Pump half-wave plate angle, degrees");
  auto* state_dphi =
      state->add_option("--dphi", dphi, "Quartz-plate phase, degrees (default 180)")->needs(state_chi);
  auto* state_c = state->add_option("--c", amplitudes, "Amplitudes c1,c2,c3; each re or re:im")
                      ->excludes(state_chi);
  state->add_option("--format", cfg.format, "text or json");
  state->add_option("-o,--output", cfg.output, "Output file (default stdout)");

  auto* partner = app.add_subcommand("partner", "Find d with the biphoton cd orthogonal to ab");
  partner->add_option("points", cfg.points, "a b c: named states (H V D Dbar R L), theta,phi, "
                                            "or with --globe city names / lat,lon")
      ->expected(3)
      ->required();
  partner->add_flag("--globe", cfg.globe, "Read coordinates as latitude,longitude");
  partner->add_option("--format", cfg.format, "text or json");
  partner->add_option("-o,--output", cfg.output, "Output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Sweep chi or a polarizer angle");
  sweep->add_option("kind", cfg.kind, "chi or polarizer")->required();
  auto* sweep_chi_opt = sweep->add_option("--chi", chi, "Half-wave plate angle for polarizer sweeps");
  auto* sweep_dphi = sweep->add_option("--dphi", dphi, "Quartz-plate phase, degrees (default 180)");
  sweep->add_option("--z1", cfg.z1, "Polarizer P1 angle, degrees");
  sweep->add_option("--z2", cfg.z2, "Polarizer P2 angle, degrees");
  sweep->add_option("--which", cfg.which, "Polarizer swept in polarizer mode (1 or 2)");
  auto* sweep_from = sweep->add_option("--from", from, "Grid start, degrees");
  auto* sweep_to = sweep->add_option("--to", to, "Grid end, degrees");
  sweep->add_option("--step", cfg.step, "Grid step, degrees");
  auto* sweep_seed = sweep->add_option("--seed", seed, "Simulate Poisson counts with this seed");
  sweep->add_option("--duration", cfg.duration, "Counting time per point, seconds");
  sweep->add_option("--drift", cfg.drift, "Fractional pump-power loss across the sweep");
  sweep->add_option("--pair-rate", cfg.model.pair_rate, "Pairs per second at the beamsplitter");
  sweep->add_option("--eta1", cfg.model.eta1, "Detector 1 efficiency");
  sweep->add_option("--eta2", cfg.model.eta2, "Detector 2 efficiency");
  sweep->add_option("--tc", cfg.model.coincidence_window, "Coincidence window, seconds");
  sweep->add_option("--bg1", cfg.model.background1, "Detector 1 background, counts/s");
  sweep->add_option("--bg2", cfg.model.background2, "Detector 2 background, counts/s");
  sweep->add_option("--format", cfg.format, "csv or json");
  sweep->add_option("-o,--output", cfg.output, "Output file (default stdout)");

  std::string config_path;
  auto* run_cmd = app.add_subcommand("run", "Execute a JSON run configuration");
  run_cmd->add_option("config", config_path, "Configuration file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  if (run_cmd->parsed()) {
    std::ifstream file(config_path);
    if (!file) {
      err << "error: cannot read '" << config_path << "'\n";
      return kIoError;
    }
    try {
      cfg = json::parse(file).get<RunConfig>();
    } catch (const std::exception& e) {
      err << "error: bad config: " << e.what() << '\n';
      return kParseError;
    }
  } else {
    cfg.command = app.get_subcommands().front()->get_name();
    if (state->parsed()) {
      if (state_chi->count() > 0) {
        cfg.chi = chi;
        cfg.dphi = state_dphi->count() > 0 ? dphi : 180.0;
      }
      if (state_c->count() > 0) {
        const auto parts = split(amplitudes, ',');
        if (parts.size() != 3) {
          err << "error: --c needs three comma-separated amplitudes\n";
          return kParseError;
        }
        try {
          cfg.amplitudes = std::array<Complex, 3>{parse_complex(parts[0]), parse_complex(parts[1]),
                                                  parse_complex(parts[2])};
        } catch (const std::exception& e) {
          err << "error: " << e.what() << '\n';
          return kParseError;
        }
      }
    }
    if (sweep->parsed()) {
      if (sweep_chi_opt->count() > 0) cfg.chi = chi;
      if (sweep_dphi->count() > 0) cfg.dphi = dphi;
      if (sweep_from->count() > 0) cfg.from = from;
      if (sweep_to->count() > 0) cfg.to = to;
      if (sweep_seed->count() > 0) cfg.seed = seed;
    }
  }

  if (!save_config.empty()) {
    const std::string path = resolve_output(save_config);
    std::ofstream file(path);
    if (!file || !(file << json(cfg).dump(2) << '\n')) {
      err << "error: cannot write '" << path << "'\n";
      return kIoError;
    }
  }
  return execute(cfg, out, err);
}

}  // namespace biqutrit::cli
