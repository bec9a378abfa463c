#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace stiefel {

/// One check of a suite. Monte Carlo checks pass when sigma <= the sigma
/// bound; deterministic checks when residual <= tolerance.
struct CheckRecord {
  std::string name;
  std::string tag;  // identity tag, e.g. "cosine-closed-form"
  int n = 0;
  int m = 0;
  int k = 0;
  std::optional<std::complex<double>> alpha;
  std::complex<double> value{0.0, 0.0};
  double stderr = 0.0;
  std::optional<std::complex<double>> reference;
  std::optional<double> sigma;
  std::optional<double> residual;
  std::optional<double> tolerance;
  bool pass = true;
  bool excluded = false;  // not evaluable (e.g. the reference sits on a pole)
  std::string note;
};

struct SuiteReport {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  nlohmann::json data;    // command-specific payload (frames, tables)
  std::string timestamp;  // excluded from reproducibility comparisons

  bool all_pass() const;
};

nlohmann::json to_json(const CheckRecord& r);
/// Full report; with include_timestamp = false the output is a pure function
/// of the configuration.
nlohmann::json to_json(const SuiteReport& r, bool include_timestamp = true);

/// Header plus one row per check, columns:
/// name,eq,n,m,k,alpha_re,alpha_im,value_re,value_im,stderr,reference_re,reference_im,sigma,pass
std::string to_csv(const SuiteReport& r);

std::string utc_timestamp();

}  // namespace stiefel
