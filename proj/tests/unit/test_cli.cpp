#include "cli_app.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace e1am::cli;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "e1am");
  std::ostringstream out, err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("e1am_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  static std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST(ConfigParsing, EmptyTextGivesDefaults) {
  const RunConfig parsed = parse_config("");
  const RunConfig defaults;
  EXPECT_EQ(parsed.kR, defaults.kR);
  EXPECT_FALSE(parsed.samples.has_value());
  EXPECT_EQ(parsed.cutoff, 3);
  EXPECT_EQ(parsed.tol, 1e-12);
  EXPECT_EQ(parsed.omega0_over_gamma, 1000.0);
  EXPECT_TRUE(parsed.out.empty());
  EXPECT_FALSE(parsed.format.has_value());
}

TEST(ConfigParsing, KeysCommentsAndWhitespace) {
  const auto config = parse_config(
      "# cavity\n"
      "kR = 50   # inline comment\n"
      "\n"
      "  samples=400\n"
      "m = -1\n"
      "omega0-over-gamma = 2500\n"
      "cutoff = 2\n"
      "tol = 1e-10\n"
      "format = json\n"
      "out = report.json\n");
  EXPECT_EQ(config.kR, 50.0);
  EXPECT_EQ(config.samples, 400u);
  EXPECT_EQ(config.m, -1);
  EXPECT_EQ(config.omega0_over_gamma, 2500.0);
  EXPECT_EQ(config.cutoff, 2);
  EXPECT_EQ(config.tol, 1e-10);
  EXPECT_EQ(config.format, Format::json);
  EXPECT_EQ(config.out, "report.json");
}

TEST(ConfigParsing, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("kR = 50\nnot a pair\n"), 2u);
  EXPECT_EQ(line_of("# x\n\nwidth = 3\n"), 3u);
  EXPECT_EQ(line_of("kR = fifty\n"), 1u);
  EXPECT_EQ(line_of("samples = 10.5\n"), 1u);
  EXPECT_EQ(line_of("format = xml\n"), 1u);
  EXPECT_EQ(line_of("kR =\n"), 1u);
}

TEST(ConfigParsing, MissingFileIsIoError) {
  EXPECT_THROW(load_config("/nonexistent/e1am.cfg"), IoError);
}

TEST(Validation, RangesPerCommand) {
  RunConfig config;
  EXPECT_NO_THROW(config.validate());
  config.kR = 10.0;
  EXPECT_THROW(config.validate(), std::invalid_argument);
  config = {};
  config.m = 2;
  EXPECT_THROW(config.validate(), std::invalid_argument);
  config = {};
  config.omega0_over_gamma = 10.0;
  EXPECT_THROW(config.validate(), std::invalid_argument);
  config = {};
  config.cutoff = 0;
  EXPECT_THROW(config.validate(), std::invalid_argument);
  config = {};
  config.tol = 0.0;
  EXPECT_THROW(config.validate(), std::invalid_argument);

  config = {};
  config.command = Command::radial;
  config.samples = 50;
  EXPECT_THROW(config.validate(), std::invalid_argument);
  config.command = Command::decay;
  EXPECT_NO_THROW(config.validate());

  config = {};
  config.command = Command::variance;
  config.format = Format::csv;
  EXPECT_THROW(config.validate(), std::invalid_argument);
}

TEST(Commands, VarianceOfZeroProjection) {
  const auto r = invoke({"variance", "--m", "0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "{\n"
            "  \"command\": \"variance\",\n"
            "  \"m\": 0,\n"
            "  \"schema\": 1,\n"
            "  \"varJx\": 1.0,\n"
            "  \"varJy\": 1.0,\n"
            "  \"varJz\": 0.0\n"
            "}\n");
}

TEST(Commands, RadialProfileCsv) {
  const auto r = invoke({"radial", "--kR", "100", "--samples", "2000"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 2001u);
  EXPECT_EQ(lines.front(), "kr,f_spin,f_oam,cum_spin,cum_oam");
  EXPECT_EQ(lines[1].substr(0, 2), "0,");
  const std::string& last = lines.back();
  EXPECT_EQ(last.substr(0, 4), "100,");
  EXPECT_EQ(last.substr(last.size() - 8), ",0.5,0.5");
}

TEST(Commands, NumbersHaveAtMostTwelveSignificantDigits) {
  const auto r = invoke({"decay", "--samples", "50"});
  ASSERT_EQ(r.code, kExitOk);
  const std::regex number(R"([-+]?[0-9]*\.?[0-9]+(e[-+]?[0-9]+)?)");
  for (const auto& line : lines_of(r.out)) {
    if (line.front() == 't') continue;
    for (auto it = std::sregex_iterator(line.begin(), line.end(), number); it != std::sregex_iterator(); ++it) {
      std::string mantissa = it->str();
      mantissa = mantissa.substr(0, mantissa.find('e'));
      std::string digits;
      for (char c : mantissa)
        if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
      digits.erase(0, digits.find_first_not_of('0'));
      EXPECT_LE(digits.size(), 12u) << it->str();
    }
  }
}

TEST(Commands, JsonReportsAreSchemaVersioned) {
  for (const std::vector<std::string> args : {std::vector<std::string>{"radial", "--format", "json", "--samples", "200"},
                                               {"algebra"},
                                               {"decay", "--format", "json"},
                                               {"entangle"}}) {
    const auto r = invoke(args);
    ASSERT_EQ(r.code, kExitOk) << args.front() << r.err;
    const auto report = json::parse(r.out);
    EXPECT_EQ(report["schema"], 1);
    EXPECT_EQ(report["command"], args.front());
  }
}

TEST(Commands, VerifyAllPassesAndIsDeterministic) {
  const auto first = invoke({"verify-all"});
  const auto second = invoke({"verify-all"});
  ASSERT_EQ(first.code, kExitOk) << first.err;
  EXPECT_EQ(first.out, second.out);
  const auto report = json::parse(first.out);
  EXPECT_EQ(report["status"], "pass");
  EXPECT_GE(report["checks"].size(), 10u);
  for (const auto& check : report["checks"]) EXPECT_EQ(check["status"], "pass") << check["name"];
}

TEST(ExitCodes, VerificationFailureIsOne) {
  // Double rounding alone exceeds this tolerance.
  const auto r = invoke({"algebra", "--tol", "1e-30"});
  EXPECT_EQ(r.code, kExitVerificationFailed);
  const auto report = json::parse(r.out);
  EXPECT_EQ(report["status"], "fail");
  const auto error = json::parse(r.err);
  EXPECT_EQ(error["error"]["exit_code"], 1);
  EXPECT_EQ(error["error"]["failed"][0], "su2_closure");
}

TEST(ExitCodes, InvalidFlagsAreTwo) {
  for (const std::vector<std::string> args : {std::vector<std::string>{"radial", "--kR", "abc"},
                                               {"radial", "--kR", "5"},
                                               {"variance", "--m", "3"},
                                               {"algebra", "--format", "csv"},
                                               {"radial", "--format", "xml"},
                                               {"radial", "--unknown"},
                                               {}}) {
    const auto r = invoke(args);
    EXPECT_EQ(r.code, kExitInvalidArguments);
    EXPECT_TRUE(r.out.empty());
    const auto error = json::parse(r.err);
    EXPECT_EQ(error["schema"], 1);
    EXPECT_EQ(error["error"]["exit_code"], 2);
  }
}

TEST(ExitCodes, HelpIsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("verify-all"), std::string::npos);
  EXPECT_NE(r.out.find("default 100"), std::string::npos);
}

TEST_F(CliFiles, FlagOverridesConfigFile) {
  const auto path = write("run.cfg", "kR = 50\nsamples = 200\nformat = json\n");
  const auto r = invoke({"radial", "--config", path, "--kR", "100"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto report = json::parse(r.out);
  EXPECT_EQ(report["kR"], 100.0);
  EXPECT_EQ(report["samples"], 200);

  const auto from_file = json::parse(invoke({"radial", "--config", path}).out);
  EXPECT_EQ(from_file["kR"], 50.0);
}

TEST_F(CliFiles, MalformedConfigReportsLine) {
  const auto path = write("bad.cfg", "# ok\nkR = 50\nthis is not valid\n");
  const auto r = invoke({"radial", "--config", path});
  EXPECT_EQ(r.code, kExitInvalidArguments);
  EXPECT_EQ(json::parse(r.err)["error"]["line"], 3);
}

TEST_F(CliFiles, IoFailuresAreThree) {
  EXPECT_EQ(invoke({"radial", "--config", (dir_ / "missing.cfg").string()}).code, kExitIoFailure);
  const auto r = invoke({"variance", "--out", (dir_ / "no" / "such" / "dir.json").string()});
  EXPECT_EQ(r.code, kExitIoFailure);
  EXPECT_EQ(json::parse(r.err)["error"]["kind"], "io_failure");
}

TEST_F(CliFiles, OutFileMatchesStdout) {
  const auto path = (dir_ / "decay.csv").string();
  ASSERT_EQ(invoke({"decay", "--out", path}).code, kExitOk);
  EXPECT_EQ(slurp(path), invoke({"decay"}).out);
}

TEST_F(CliFiles, ExecutableExitCodesAndByteIdenticalReports) {
  const std::string exe = E1AM_CLI_PATH;
  auto status_of = [&](const std::string& args) {
    const int raw = std::system((exe + " " + args + " 2>/dev/null >/dev/null").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  const auto a = (dir_ / "a.json").string();
  const auto b = (dir_ / "b.json").string();
  EXPECT_EQ(status_of("verify-all --out " + a), 0);
  EXPECT_EQ(status_of("verify-all --out " + b), 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());

  EXPECT_EQ(status_of("algebra --tol 1e-30"), 1);
  EXPECT_EQ(status_of("radial --kR oops"), 2);
  EXPECT_EQ(status_of("variance --out " + (dir_ / "x" / "y.json").string()), 3);
}
