#include "stiefel/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace stiefel {

bool SuiteReport::all_pass() const {
  for (const CheckRecord& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

nlohmann::json complex_json(std::complex<double> z) { return nlohmann::json::array({z.real(), z.imag()}); }

// Shortest round-trip representation; empty for missing values.
std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

nlohmann::json to_json(const CheckRecord& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["eq"] = r.tag;
  j["n"] = r.n;
  j["m"] = r.m;
  j["k"] = r.k;
  j["alpha"] = r.alpha ? complex_json(*r.alpha) : nlohmann::json();
  j["value"] = complex_json(r.value);
  j["stderr"] = r.stderr;
  j["reference"] = r.reference ? complex_json(*r.reference) : nlohmann::json();
  j["sigma"] = r.sigma ? nlohmann::json(*r.sigma) : nlohmann::json();
  j["residual"] = r.residual ? nlohmann::json(*r.residual) : nlohmann::json();
  j["tolerance"] = r.tolerance ? nlohmann::json(*r.tolerance) : nlohmann::json();
  j["pass"] = r.pass;
  if (r.excluded) j["excluded"] = true;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const SuiteReport& r, bool include_timestamp) {
  nlohmann::json j;
  j["command"] = r.command;
  j["seed"] = r.seed;
  j["all_pass"] = r.all_pass();
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckRecord& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  if (!r.data.is_null()) j["data"] = r.data;
  if (include_timestamp) j["timestamp"] = r.timestamp;
  return j;
}

std::string to_csv(const SuiteReport& r) {
  std::ostringstream os;
  os << "name,eq,n,m,k,alpha_re,alpha_im,value_re,value_im,stderr,reference_re,reference_im,sigma,pass\n";
  for (const CheckRecord& c : r.checks) {
    os << csv_field(c.name) << ',' << csv_field(c.tag) << ',' << c.n << ',' << c.m << ',' << c.k << ',';
    if (c.alpha) {
      os << num(c.alpha->real()) << ',' << num(c.alpha->imag()) << ',';
    } else {
      os << ",,";
    }
    os << num(c.value.real()) << ',' << num(c.value.imag()) << ',' << num(c.stderr) << ',';
    if (c.reference) {
      os << num(c.reference->real()) << ',' << num(c.reference->imag()) << ',';
    } else {
      os << ",,";
    }
    if (c.sigma) os << num(*c.sigma);
    os << ',' << (c.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace stiefel
