#include "cli_app.hpp"

#include "e1am/angular_algebra.hpp"
#include "e1am/decay_dynamics.hpp"
#include "e1am/format.hpp"
#include "e1am/radial_fields.hpp"
#include "e1am/twin_entanglement.hpp"

#ifdef E1AM_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

namespace e1am::cli {

namespace {

using nlohmann::json;

constexpr int kSchema = 1;
constexpr double kMaxKR = 1e5;
constexpr std::size_t kDefaultRadialSamples = 1000;
constexpr std::size_t kDefaultDecaySamples = 101;
constexpr int kMaxCutoff = 8;

const std::map<std::string, Command>& command_names() {
  static const std::map<std::string, Command> names = {
      {"radial", Command::radial},   {"algebra", Command::algebra},   {"variance", Command::variance},
      {"decay", Command::decay},     {"entangle", Command::entangle}, {"verify-all", Command::verify_all},
  };
  return names;
}

bool csv_capable(Command command) { return command == Command::radial || command == Command::decay; }

Format effective_format(const RunConfig& config) {
  if (config.format) return *config.format;
  return csv_capable(config.command) ? Format::csv : Format::json;
}

std::size_t effective_samples(const RunConfig& config) {
  if (config.samples) return *config.samples;
  return config.command == Command::decay ? kDefaultDecaySamples : kDefaultRadialSamples;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& text, std::size_t line, const std::string& key) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw ConfigError(line, "invalid value '" + text + "' for " + key);
  return value;
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw std::invalid_argument("format must be csv or json, got '" + text + "'");
}

json error_report(int code, const std::string& kind, const std::string& message) {
  return {{"schema", kSchema}, {"error", {{"exit_code", code}, {"kind", kind}, {"message", message}}}};
}

int report_error(std::ostream& err, int code, const std::string& kind, const std::string& message,
                 const json& extra = json::object()) {
  json report = error_report(code, kind, message);
  for (const auto& [key, value] : extra.items()) report["error"][key] = value;
  err << report.dump() << '\n';
  return code;
}

json status(bool pass) { return pass ? "pass" : "fail"; }

// ---------------------------------------------------------------------------
// verification checks shared by algebra, entangle and verify-all

json check_su2(int cutoff, double tol) {
  const auto report = verify_su2(j_operators(photon_mode_space(cutoff)), tol);
  json j = to_json(report);
  j["name"] = "su2_closure";
  j["cutoff"] = cutoff;
  j["status"] = status(report.pass);
  return j;
}

json check_su3(int cutoff) {
  const auto space = photon_mode_space(cutoff);
  const auto set = su3_generators(space);
  const auto dependence = safe_max_abs(set.raw_diagonal[0] + set.raw_diagonal[1] + set.raw_diagonal[2]);
  double hermiticity = 0.0;
  for (const auto& g : set.generators())
    hermiticity = std::max(hermiticity, (g.matrix() - g.matrix().adjoint()).cwiseAbs().maxCoeff());

  const auto blocks = su3_single_photon_blocks();
  Eigen::MatrixXd stacked(18, 8);
  for (std::size_t g = 0; g < blocks.size(); ++g)
    for (Eigen::Index i = 0; i < 9; ++i) {
      stacked(i, static_cast<Eigen::Index>(g)) = blocks[g](i % 3, i / 3).real();
      stacked(9 + i, static_cast<Eigen::Index>(g)) = blocks[g](i % 3, i / 3).imag();
    }
  const auto rank = Eigen::FullPivLU<Eigen::MatrixXd>(stacked).rank();
  const bool pass = dependence == 0.0 && hermiticity == 0.0 && rank == 8;
  return {{"name", "su3_generators"},        {"diagonal_sum_max_abs", round12(dependence)},
          {"hermiticity_max_abs", round12(hermiticity)}, {"independent_rank", rank},
          {"status", status(pass)}};
}

json check_density(double kR, double tol) {
  const radial::RadialModel model(radial::CavityConfig::from_kr(kR));
  const std::array<std::pair<DensityKind, DensityKind>, 3> families = {{
      {DensityKind::spin, DensityKind::spin},
      {DensityKind::oam, DensityKind::oam},
      {DensityKind::oam, DensityKind::spin},
  }};
  json rows = json::array();
  bool pass = true;
  for (double kr : {0.5, 3.0, 50.0})
    for (const auto& [a, b] : families) {
      const auto report = density_commutator_check(a, b, kr, model, tol);
      json row = to_json(report);
      row["kr"] = kr;
      rows.push_back(row);
      pass = pass && report.pass;
    }
  return {{"name", "density_commutators"}, {"kR", round12(kR)}, {"identities", rows}, {"status", status(pass)}};
}

json check_variances() {
  const auto zero = am_variances(0);
  const auto plus = am_variances(+1);
  const auto minus = am_variances(-1);
  auto near = [](double a, double b) { return std::abs(a - b) < kExactTol; };
  const bool pass = near(zero.x, 1.0) && near(zero.y, 1.0) && near(zero.z, 0.0) && near(plus.x, 0.5) &&
                    near(plus.y, 0.5) && near(plus.z, 0.0) && near(minus.x, 0.5) && near(minus.y, 0.5) &&
                    near(minus.z, 0.0) && zero.x > plus.x;
  auto row = [](const AmVariances& v) {
    return json{{"varJx", round12(v.x)}, {"varJy", round12(v.y)}, {"varJz", round12(v.z)}};
  };
  return {{"name", "variance_table"}, {"m=0", row(zero)}, {"m=+1", row(plus)}, {"m=-1", row(minus)},
          {"status", status(pass)}};
}

json check_shell_integrals() {
  json rows = json::array();
  bool pass = true;
  for (double kR : {20.0, 100.0, 500.0}) {
    const radial::RadialModel model(radial::CavityConfig::from_kr(kR));
    const double spin = model.shell_integral_spin(0.0, kR);
    const double oam = model.shell_integral_oam(0.0, kR);
    const bool ok = std::abs(spin - 0.5) < 1e-6 && std::abs(oam - 0.5) < 1e-6 && std::abs(spin + oam - 1.0) < 2e-6;
    rows.push_back({{"kR", kR}, {"cum_spin", round12(spin)}, {"cum_oam", round12(oam)}, {"total", round12(spin + oam)}});
    pass = pass && ok;
  }
  return {{"name", "shell_integrals"}, {"cavities", rows}, {"status", status(pass)}};
}

json check_zones(double kR, std::size_t samples) {
  const auto config = radial::CavityConfig::from_kr(kR);
  const auto zones = radial::zone_report(config);
  const auto profile = radial::radial_profile(config, samples);
  std::size_t spin_argmax = 0;
  for (std::size_t i = 1; i < profile.samples.size(); ++i)
    if (profile.samples[i].f_spin > profile.samples[spin_argmax].f_spin) spin_argmax = i;
  const double oam_origin = radial::RadialModel(config).f_oam(0.0);

  const bool near_pass = zones.near_ratio > 100.0 && oam_origin == 0.0 && spin_argmax == 0;
  const bool peak_pass = zones.oam_peak_over_lambda >= 0.4 && zones.oam_peak_over_lambda <= 0.65;
  json near = {{"name", "near_zone"},
               {"near_ratio", round12(zones.near_ratio)},
               {"f_oam_origin", oam_origin},
               {"f_spin_argmax_kr", round12(profile.samples[spin_argmax].kr)},
               {"status", status(near_pass)}};
  json peak = {{"name", "oam_peak"},
               {"oam_peak_kr", round12(zones.oam_peak_kr)},
               {"oam_peak_over_lambda", round12(zones.oam_peak_over_lambda)},
               {"status", status(peak_pass)}};
  return json::array({near, peak});
}

json check_wave_zone() {
  const radial::RadialModel model(radial::CavityConfig::from_kr(1000.0));
  json rows = json::array();
  bool pass = true;
  double previous = 1.0;
  for (double start : {100.0, 200.0, 400.0, 800.0}) {
    const double d = radial::windowed_discrepancy(model, start);
    pass = pass && d < 0.05 && d < previous;
    previous = d;
    rows.push_back({{"start_kr", start}, {"discrepancy", round12(d)}});
  }
  return {{"name", "wave_zone"}, {"kR", 1000.0}, {"windows", rows}, {"status", status(pass)}};
}

json check_decay() {
  const auto params = decay::params_from_ratio(1e3);
  const auto curve = decay::sz_curve(params);
  double sz_deviation = 0.0;
  for (std::size_t i = 0; i < curve.t.size(); ++i)
    sz_deviation = std::max(sz_deviation,
                            std::abs(curve.sz_expect[i] - 0.5 * (1.0 - std::exp(-2.0 * params.gamma * curve.t[i]))));

  json rows = json::array();
  bool pass = sz_deviation <= 4.0 * std::numeric_limits<double>::epsilon();
  double previous = 0.0;
  bool first = true;
  for (double ratio : {1e3, 3e3, 1e4}) {
    const auto p = decay::params_from_ratio(ratio, 1);
    const double residual = decay::conservation_check(p, 10.0 / p.gamma);
    if (first) pass = pass && std::abs(residual) < 0.02;
    else pass = pass && std::abs(residual) < previous;
    previous = std::abs(residual);
    first = false;
    rows.push_back({{"omega0_over_gamma", ratio}, {"norm_residual", round12(residual)}});
  }
  return {{"name", "decay"}, {"sz_max_deviation", round12(sz_deviation)}, {"conservation", rows},
          {"status", status(pass)}};
}

json check_entanglement() {
  const auto optimum = twins::maximize_entanglement();
  const double mu_exact = 2.0 / (3.0 * std::sqrt(3.0));
  const bool pass = std::abs(optimum.c1_abs - 1.0 / std::sqrt(3.0)) < 1e-8 &&
                    std::abs(optimum.c2_abs - std::sqrt(2.0 / 3.0)) < 1e-8 &&
                    optimum.local_expectation_max_abs < 1e-8 && std::abs(optimum.mu_max - mu_exact) < 1e-10 &&
                    optimum.variational_pass;
  json j = to_json(optimum);
  j["name"] = "entanglement_maximum";
  j["status"] = status(pass);
  return j;
}

json check_selection_rule() {
  const twins::HamiltonianParams params;
  const auto h = twins::interaction_hamiltonian(std::make_shared<const twins::AtomFieldSpace>(), params);
  const auto report = twins::selection_rule_check(h, params);
  json j = to_json(report);
  j["name"] = "selection_rule";
  j["status"] = status(report.pass);
  return j;
}

bool all_pass(const json& checks) {
  for (const auto& c : checks)
    if (c["status"] != "pass") return false;
  return true;
}

json failed_names(const json& checks) {
  json names = json::array();
  for (const auto& c : checks)
    if (c["status"] != "pass") names.push_back(c["name"]);
  return names;
}

// ---------------------------------------------------------------------------

struct Outcome {
  std::string body;
  json checks = json::array();  // empty for pure computations
};

json envelope(Command command) { return {{"schema", kSchema}, {"command", to_string(command)}}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Outcome run_radial(const RunConfig& config) {
  const auto cavity = radial::CavityConfig::from_kr(config.kR);
  const auto profile = radial::radial_profile(cavity, effective_samples(config));
  if (effective_format(config) == Format::csv) return {radial::to_csv(profile)};
  json j = envelope(config.command);
  j["kR"] = round12(config.kR);
  j["samples"] = profile.samples.size();
  j["cum_spin_total"] = round12(profile.samples.back().cum_spin);
  j["cum_oam_total"] = round12(profile.samples.back().cum_oam);
  j["zones"] = radial::to_json(radial::zone_report(cavity));
  return {dump(j)};
}

Outcome run_algebra(const RunConfig& config) {
  json checks = {check_su2(config.cutoff, config.tol), check_su3(config.cutoff), check_density(config.kR, config.tol)};
  json j = envelope(config.command);
  j["checks"] = checks;
  j["status"] = status(all_pass(checks));
  return {dump(j), checks};
}

Outcome run_variance(const RunConfig& config) {
  const auto v = am_variances(config.m);
  json j = envelope(config.command);
  j["m"] = config.m;
  j["varJx"] = round12(v.x);
  j["varJy"] = round12(v.y);
  j["varJz"] = round12(v.z);
  return {dump(j)};
}

Outcome run_decay(const RunConfig& config) {
  const std::size_t rows = effective_samples(config);
  const auto params = decay::params_from_ratio(config.omega0_over_gamma, rows - 1);
  if (effective_format(config) == Format::csv) return {decay::to_csv(decay::sz_curve(params))};
  const decay::DecayModel model(params);
  const double t_end = params.time_grid.back();
  json j = envelope(config.command);
  j["omega0_over_gamma"] = round12(config.omega0_over_gamma);
  j["samples"] = rows;
  j["calibration"] = round12(model.calibration());
  j["t_final"] = round12(t_end);
  j["sz_over_hbar_final"] = round12(decay::sz_over_hbar(t_end, params));
  j["norm_residual_final"] = round12(model.norm_residual(t_end));
  return {dump(j)};
}

Outcome run_entangle(const RunConfig& config) {
  json checks = {check_entanglement(), check_selection_rule()};
  json j = envelope(config.command);
  j["checks"] = checks;
  j["status"] = status(all_pass(checks));
  return {dump(j), checks};
}

Outcome run_verify_all(const RunConfig& config) {
  json checks = json::array();
  checks.push_back(check_su2(config.cutoff, config.tol));
  checks.push_back(check_variances());
  checks.push_back(check_shell_integrals());
  for (auto& zone : check_zones(config.kR, effective_samples(config))) checks.push_back(zone);
  checks.push_back(check_wave_zone());
  checks.push_back(check_density(config.kR, config.tol));
  checks.push_back(check_decay());
  checks.push_back(check_entanglement());
  checks.push_back(check_selection_rule());
  checks.push_back(check_su3(config.cutoff));

  json j = envelope(config.command);
  j["config"] = {{"kR", round12(config.kR)}, {"samples", effective_samples(config)}, {"cutoff", config.cutoff},
                 {"tol", config.tol}};
  j["checks"] = checks;
  j["status"] = status(all_pass(checks));
  return {dump(j), checks};
}

Outcome dispatch(const RunConfig& config) {
  switch (config.command) {
    case Command::radial: return run_radial(config);
    case Command::algebra: return run_algebra(config);
    case Command::variance: return run_variance(config);
    case Command::decay: return run_decay(config);
    case Command::entangle: return run_entangle(config);
    case Command::verify_all: return run_verify_all(config);
  }
  throw std::logic_error("unknown command");
}

void apply_key(RunConfig& config, const std::string& key, const std::string& value, std::size_t line) {
  if (key == "kR") config.kR = parse_number<double>(value, line, key);
  else if (key == "samples") config.samples = parse_number<std::size_t>(value, line, key);
  else if (key == "m") config.m = parse_number<int>(value, line, key);
  else if (key == "omega0_over_gamma" || key == "omega0-over-gamma")
    config.omega0_over_gamma = parse_number<double>(value, line, key);
  else if (key == "cutoff") config.cutoff = parse_number<int>(value, line, key);
  else if (key == "tol") config.tol = parse_number<double>(value, line, key);
  else if (key == "out") config.out = value;
  else if (key == "format") {
    try {
      config.format = parse_format(value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(line, e.what());
    }
  } else
    throw ConfigError(line, "unknown key '" + key + "'");
}

}  // namespace

ConfigError::ConfigError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string to_string(Command command) {
  for (const auto& [name, value] : command_names())
    if (value == command) return name;
  return "unknown";
}

void RunConfig::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (!std::isfinite(kR) || kR < radial::kMinKR || kR > kMaxKR)
    fail("kR must lie in [" + format12(radial::kMinKR) + ", " + format12(kMaxKR) + "]");
  if (samples) {
    if (command == Command::decay && (*samples < 2 || *samples > 1000000)) fail("decay samples must lie in [2, 1e6]");
    if (command != Command::decay && (*samples < 100 || *samples > 10000000))
      fail("radial samples must lie in [100, 1e7]");
  }
  if (m < -1 || m > 1) fail("m must be -1, 0 or +1");
  if (!std::isfinite(omega0_over_gamma) || omega0_over_gamma < decay::kMinQuality || omega0_over_gamma > 1e9)
    fail("omega0-over-gamma must lie in [" + format12(decay::kMinQuality) + ", 1e9]");
  if (cutoff < 1 || cutoff > kMaxCutoff) fail("cutoff must lie in [1, " + std::to_string(kMaxCutoff) + "]");
  if (!std::isfinite(tol) || tol <= 0.0) fail("tol must be positive");
  if (format == Format::csv && !csv_capable(command)) fail(to_string(command) + " only writes json");
}

RunConfig parse_config(const std::string& text, RunConfig base) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value'");
    const std::string key = trim(content.substr(0, eq));
    const std::string value = trim(content.substr(eq + 1));
    if (key.empty() || value.empty()) throw ConfigError(line, "expected 'key = value'");
    apply_key(base, key, value, line);
  }
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), std::move(base));
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    return report_error(err, kExitInvalidArguments, "invalid_arguments", e.what());
  }

  Outcome outcome;
  try {
    outcome = dispatch(config);
  } catch (const std::invalid_argument& e) {
    return report_error(err, kExitInvalidArguments, "invalid_arguments", e.what());
  }

  if (config.out.empty()) {
    out << outcome.body;
    out.flush();
  } else {
    std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
    file << outcome.body;
    file.close();
    if (!file) return report_error(err, kExitIoFailure, "io_failure", "cannot write '" + config.out + "'");
  }

  if (!all_pass(outcome.checks))
    return report_error(err, kExitVerificationFailed, "verification_failed", "one or more checks failed",
                        {{"failed", failed_names(outcome.checks)}});
  return kExitOk;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Angular momentum of E1 photons: radial profiles, operator algebra, decay and twin entanglement"};
  app.name("e1am");
  app.require_subcommand(1);

  std::optional<double> kR, omega0_over_gamma, tol;
  std::optional<std::size_t> samples;
  std::optional<int> m, cutoff;
  std::optional<std::string> out_path, format, config_path;

  app.add_option("--kR", kR, "cavity size kR (default 100; >= 20)");
  app.add_option("--samples", samples, "radial grid points (default 1000) or decay time points (default 101)");
  app.add_option("--m", m, "photon projection for variance: -1, 0 or 1 (default 0)");
  app.add_option("--omega0-over-gamma", omega0_over_gamma, "decay quality factor (default 1000; >= 50)");
  app.add_option("--cutoff", cutoff, "Fock-space cutoff for algebra checks (default 3)");
  app.add_option("--tol", tol, "commutator tolerance (default 1e-12)");
  app.add_option("--out", out_path, "output file (default: standard output)");
  app.add_option("--format", format, "csv or json (default: csv for radial and decay, json otherwise)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--config", config_path, "key = value file; flags override its values");

  std::map<CLI::App*, Command> subcommands;
  auto add = [&](const std::string& name, const std::string& help) {
    subcommands[app.add_subcommand(name, help)->fallthrough()] = command_names().at(name);
  };
  add("radial", "spin / orbital AM density profile with cumulative shell integrals");
  add("algebra", "SU(2) closure, SU(3) generators and density commutator identities");
  add("variance", "variances of Jx, Jy, Jz in the one-photon state |1_m>");
  add("decay", "spin expectation and norm residual during spontaneous decay");
  add("entangle", "maximally entangled photon twins and the parity selection rule");
  add("verify-all", "every verification check, aggregated");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("e1am");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report_error(err, kExitInvalidArguments, "invalid_arguments", e.what());
  }

  RunConfig config;
  if (config_path) {
    try {
      config = load_config(*config_path);
    } catch (const ConfigError& e) {
      return report_error(err, kExitInvalidArguments, "config_parse", e.what(), {{"line", e.line()}});
    } catch (const IoError& e) {
      return report_error(err, kExitIoFailure, "io_failure", e.what());
    }
  }
  for (const auto& [sub, command] : subcommands)
    if (sub->parsed()) config.command = command;
  if (kR) config.kR = *kR;
  if (samples) config.samples = *samples;
  if (m) config.m = *m;
  if (omega0_over_gamma) config.omega0_over_gamma = *omega0_over_gamma;
  if (cutoff) config.cutoff = *cutoff;
  if (tol) config.tol = *tol;
  if (out_path) config.out = *out_path;
  if (format) config.format = parse_format(*format);

  return run(config, out, err);
}

}  // namespace e1am::cli
