#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stiefel/report.hpp"

namespace stiefel::cli {

struct RunConfig {
  std::string command;     // transform | identity | table | zeta | rankone | sample
  std::string suite;       // identity: closed-form | gaussian-zeta | bernstein | zeta-limit |
                           //           duality | complement | inversion | haar
  std::string subcommand;  // rankone: multiplier | compose | funk | decay
  std::string kind = "cosine";     // transform kind
  std::string function = "const";  // test-function registry name
  std::string which = "cosine-const";  // table
  std::string grid = "small";          // table
  int n = 3;
  int m = 1;
  int k = 1;
  std::complex<double> alpha{2.0, 0.0};  // alpha, or lambda for rankone
  std::size_t n_samples = 0;             // 0: command default
  std::uint64_t seed = 0;
  int count = 1;   // sample
  int j = 2;       // rankone funk
  std::optional<int> j_max;
  std::vector<std::complex<double>> lambda_grid;  // rankone compose
  unsigned workers = 0;
  std::string out;
  std::string format = "json";
};

struct RunResult {
  int exit_code = 0;  // 0 all pass, 1 check failure, 2 config or domain error
  SuiteReport report;
  std::string output;  // formatted report, or empty on error
  std::string error;
};

/// "2", "1.5,0.5", "1+0.5i", "-0.3-2i", "0.5i".
std::complex<double> parse_complex(const std::string& s);

/// Overlays the keys present in j onto cfg. Unknown keys are a ConfigError.
void apply_json(RunConfig& cfg, const nlohmann::json& j);

/// Validates and dispatches. Never throws for library errors; they become
/// exit code 2 with the message in RunResult::error.
RunResult run(const RunConfig& cfg);

std::string format_report(const SuiteReport& report, const std::string& format);

}  // namespace stiefel::cli
