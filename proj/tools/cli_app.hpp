#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace e1am::cli {

enum class Command { radial, algebra, variance, decay, entangle, verify_all };

enum class Format { csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidArguments = 2;
inline constexpr int kExitIoFailure = 3;

/// Everything one invocation needs. Unset optionals fall back to per-command
/// defaults (see --help).
struct RunConfig {
  Command command = Command::verify_all;
  double kR = 100.0;
  std::optional<std::size_t> samples;
  int m = 0;
  double omega0_over_gamma = 1000.0;
  int cutoff = 3;
  double tol = 1e-12;
  std::string out;  // empty: standard output
  std::optional<Format> format;

  /// Throws std::invalid_argument when a value is outside the range the
  /// selected command accepts.
  void validate() const;
};

/// Bad config file content; line is 1-based.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Config file that could not be read at all.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies `key = value` lines (with `#` comments) on top of `base`.
/// Keys: kR, samples, m, omega0_over_gamma, cutoff, tol, out, format.
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

std::string to_string(Command command);

/// Runs one command, writing the report to config.out (or `out`) and JSON
/// error reports to `err`. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point: flag parsing, config file, run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace e1am::cli
