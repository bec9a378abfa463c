#include "stiefel/cli.hpp"

#include <cmath>
#include <regex>
#include <set>

#include "stiefel/error.hpp"
#include "stiefel/functions.hpp"
#include "stiefel/gamma.hpp"
#include "stiefel/io.hpp"
#include "stiefel/manifold.hpp"
#include "stiefel/suites.hpp"
#include "stiefel/transforms.hpp"
#include "stiefel/zeta.hpp"

namespace stiefel::cli {

std::complex<double> parse_complex(const std::string& s) {
  static const std::regex pair(R"(^\s*([-+]?[0-9.eE+-]+)\s*,\s*([-+]?[0-9.eE+-]+)\s*$)");
  static const std::regex real(R"(^\s*([-+]?(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][-+]?[0-9]+)?)\s*$)");
  static const std::regex imag(R"(^\s*([-+]?(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][-+]?[0-9]+)?)?i\s*$)");
  static const std::regex full(
      R"(^\s*([-+]?(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][-+]?[0-9]+)?)\s*([-+])\s*((?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][-+]?[0-9]+)?)?i\s*$)");
  std::smatch mt;
  try {
    if (std::regex_match(s, mt, real)) return {std::stod(mt[1]), 0.0};
    if (std::regex_match(s, mt, pair)) return {std::stod(mt[1]), std::stod(mt[2])};
    if (std::regex_match(s, mt, imag)) {
      const std::string c = mt[1];
      const double v = c.empty() || c == "+" ? 1.0 : (c == "-" ? -1.0 : std::stod(c));
      return {0.0, v};
    }
    if (std::regex_match(s, mt, full)) {
      const double im = mt[3].length() == 0 ? 1.0 : std::stod(mt[3]);
      return {std::stod(mt[1]), mt[2] == "-" ? -im : im};
    }
  } catch (const std::exception&) {
  }
  throw ConfigError("cannot parse complex value '" + s + "'");
}

namespace {

std::complex<double> json_complex(const nlohmann::json& v) {
  if (v.is_string()) return parse_complex(v.get<std::string>());
  return complex_from_json(v);
}

}  // namespace

void apply_json(RunConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& key = it.key();
      const nlohmann::json& v = it.value();
      if (key == "command") cfg.command = v.get<std::string>();
      else if (key == "suite") cfg.suite = v.get<std::string>();
      else if (key == "subcommand") cfg.subcommand = v.get<std::string>();
      else if (key == "kind") cfg.kind = v.get<std::string>();
      else if (key == "function") cfg.function = v.get<std::string>();
      else if (key == "which") cfg.which = v.get<std::string>();
      else if (key == "grid") cfg.grid = v.get<std::string>();
      else if (key == "n") cfg.n = v.get<int>();
      else if (key == "m") cfg.m = v.get<int>();
      else if (key == "k") cfg.k = v.get<int>();
      else if (key == "alpha" || key == "lambda") cfg.alpha = json_complex(v);
      else if (key == "n_samples") cfg.n_samples = v.get<std::size_t>();
      else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
      else if (key == "count") cfg.count = v.get<int>();
      else if (key == "j") cfg.j = v.get<int>();
      else if (key == "j_max") cfg.j_max = v.get<int>();
      else if (key == "lambda_grid") {
        cfg.lambda_grid.clear();
        for (const auto& x : v) cfg.lambda_grid.push_back(json_complex(x));
      } else if (key == "workers") cfg.workers = v.get<unsigned>();
      else if (key == "out") cfg.out = v.get<std::string>();
      else if (key == "format") cfg.format = v.get<std::string>();
      else throw ConfigError("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("invalid config value: ") + ex.what());
  }
}

std::string format_report(const SuiteReport& report, const std::string& format) {
  if (format == "csv") return to_csv(report);
  return to_json(report).dump(2) + "\n";
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

void validate_common(const RunConfig& c) {
  static const std::set<std::string> commands = {"transform", "identity", "table", "zeta", "rankone", "sample"};
  require(commands.count(c.command) == 1, "command must be one of transform, identity, table, zeta, rankone, sample");
  require(c.format == "json" || c.format == "csv", "format must be json or csv");
  require(c.n >= 1, "n must be >= 1");
  require(c.m >= 1 && c.m <= c.n, "m must satisfy 1 <= m <= n");
  require(std::isfinite(c.alpha.real()) && std::isfinite(c.alpha.imag()), "alpha must be finite");
}

suites::Case make_case(const RunConfig& c, const McOptions& mc) {
  suites::Case s;
  s.n = c.n;
  s.m = c.m;
  s.k = c.k;
  s.alpha = c.alpha;
  s.n_samples = c.n_samples;
  s.seed = c.seed;
  s.mc = mc;
  return s;
}

void run_transform(const RunConfig& c, const McOptions& mc, SuiteReport& rep) {
  TransformRequest req;
  req.kind = transform_kind_from_string(c.kind);
  req.n = c.n;
  req.m = c.m;
  req.k = c.k;
  req.alpha = c.alpha;
  req.n_samples = c.n_samples;
  req.seed = c.seed;
  const bool dual = req.kind == TransformKind::dual_cosine || req.kind == TransformKind::dual_sine ||
                    req.kind == TransformKind::dual_funk;
  const bool square = req.kind == TransformKind::M || req.kind == TransformKind::Q ||
                      req.kind == TransformKind::M_normalized;
  if (square) req.k = req.m;
  require(req.k >= 1 && req.k <= c.n, "k must satisfy 1 <= k <= n");
  if (!square) require(req.k >= c.m || req.kind == TransformKind::funk || req.kind == TransformKind::dual_funk ||
                           req.kind == TransformKind::sine || req.kind == TransformKind::dual_sine,
                       "k must satisfy m <= k for cosine transforms");
  const int fm = dual ? req.k : req.m;
  const int pm = dual ? req.m : req.k;
  const ManifoldFunction f = function_from_name(c.function, c.n, fm);
  const MCEstimate e = evaluate(req, f, Frame::canonical(c.n, pm), mc);

  CheckRecord r;
  r.name = to_string(req.kind) + " transform of " + c.function;
  r.tag = to_string(req.kind);
  r.n = c.n;
  r.m = c.m;
  r.k = req.k;
  r.alpha = c.alpha;
  r.value = e.value;
  r.stderr = e.stderr;
  std::optional<complex> ref;
  if (c.function == "const") {
    if ((req.kind == TransformKind::cosine || req.kind == TransformKind::dual_cosine) && req.k <= c.n - 1) {
      ref = cosine_const(c.n, c.m, req.k, c.alpha);
    } else if (req.kind == TransformKind::funk || req.kind == TransformKind::dual_funk) {
      ref = 1.0;
    }
  }
  if (ref) {
    r.tag = req.kind == TransformKind::cosine || req.kind == TransformKind::dual_cosine ? "cosine-closed-form"
                                                                                         : "funk-constant";
    r.reference = *ref;
    r.sigma = sigma_distance(e.value, *ref, e.stderr);
    r.pass = *r.sigma <= suites::kSigmaBound;
  }
  rep.checks.push_back(r);
  rep.data = {{"request", request_to_json(req)}, {"estimate", estimate_to_json(e)}};
}

void run_identity(const RunConfig& c, const McOptions& mc, SuiteReport& rep) {
  const suites::Case s = make_case(c, mc);
  const std::string& suite = c.suite;
  if (suite == "closed-form") {
    require(c.m <= c.k && c.k <= c.n - 1, "closed-form needs m <= k <= n - 1");
    rep.checks.push_back(suites::closed_form(s));
  } else if (suite == "gaussian-zeta") {
    rep.checks.push_back(suites::gaussian_zeta(s));
  } else if (suite == "bernstein") {
    require(c.m <= 2, "bernstein needs m <= 2");
    rep.checks.push_back(suites::bernstein(s, c.count > 1 ? c.count : 20));
  } else if (suite == "zeta-limit") {
    require(c.m == 1, "zeta-limit needs m = 1");
    rep.checks.push_back(suites::zeta_limit(s));
  } else if (suite == "duality") {
    require(c.k >= 1 && c.k + c.m <= c.n, "duality needs k + m <= n");
    rep.checks.push_back(suites::duality(s));
  } else if (suite == "complement") {
    require(c.m <= c.k && c.k <= c.n - 1, "complement needs m <= k <= n - 1");
    for (auto& r : suites::complement(s)) rep.checks.push_back(r);
  } else if (suite == "inversion") {
    require(c.m <= c.k && c.k <= c.n - c.m, "inversion needs m <= k <= n - m");
    rep.checks.push_back(suites::inversion(s));
  } else if (suite == "haar") {
    rep.checks.push_back(suites::haar_moment(s));
  } else {
    throw ConfigError("suite must be one of closed-form, gaussian-zeta, bernstein, zeta-limit, duality, "
                      "complement, inversion, haar");
  }
}

void run_table(const RunConfig& c, SuiteReport& rep) {
  require(c.grid == "small" || c.grid == "medium", "grid must be small or medium");
  const int n_max = c.grid == "small" ? 5 : 8;
  const int m_max = c.grid == "small" ? 2 : 3;
  auto add = [&rep](const std::string& name, int n, int m, int k, std::optional<complex> a, complex v) {
    CheckRecord r;
    r.name = name;
    r.tag = name;
    r.n = n;
    r.m = m;
    r.k = k;
    r.alpha = a;
    r.value = v;
    rep.checks.push_back(r);
  };
  if (c.which == "cosine-const") {
    for (int n = 3; n <= n_max; ++n) {
      for (int m = 1; m <= m_max; ++m) {
        for (int k = m; k <= n - 1; ++k) {
          for (double da : {0.5, 1.0, 2.0}) add("cosine-const", n, m, k, m + da, cosine_const(n, m, k, m + da));
        }
      }
    }
  } else if (c.which == "funk-const") {
    for (int n = 2; n <= n_max; ++n) {
      for (int m = 1; m <= m_max; ++m) {
        for (int k = m; k + m <= n; ++k) add("funk-const", n, m, k, std::nullopt, funk_const(n, m, k));
      }
    }
  } else if (c.which == "siegel-gamma") {
    for (int m = 1; m <= m_max; ++m) {
      for (double a : {0.75, 1.0, 1.5, 2.0, 2.5, 3.0}) {
        const GammaEvalResult g = siegel_gamma(m, a);
        if (!g.at_pole) add("siegel-gamma", 0, m, 0, a, g.value);
      }
    }
  } else if (c.which == "stiefel-volume") {
    for (int n = 1; n <= n_max; ++n) {
      for (int m = 1; m <= std::min(n, m_max); ++m) add("stiefel-volume", n, m, 0, std::nullopt, stiefel_volume(n, m));
    }
  } else if (c.which == "multiplier") {
    for (int n = 3; n <= n_max; ++n) {
      for (double l : {0.5, 1.0, 2.5}) {
        for (int j = 0; j <= 10; j += 2) add("multiplier", n, 1, 1, l, multiplier_c(j, l, n));
      }
    }
  } else {
    throw ConfigError("table must be one of cosine-const, funk-const, siegel-gamma, stiefel-volume, multiplier");
  }
}

void run_zeta(const RunConfig& c, const McOptions& mc, SuiteReport& rep) {
  const std::string name = c.function == "const" ? "gaussian" : c.function;
  const zeta::SchwartzTestFunction f = zeta::SchwartzTestFunction::from_name(name, c.n, c.m);
  zeta::QuadratureSpec spec;
  if (c.n_samples != 0) spec.n_samples = c.n_samples;
  spec.seed = c.seed;
  spec.mc = mc;
  const zeta::ZetaValue z = zeta::zeta_value(f, c.alpha, spec);
  CheckRecord r;
  r.name = "zeta " + name;
  r.tag = z.path == zeta::ZetaPath::direct ? "zeta-direct" : "zeta-bernstein-continuation";
  r.n = c.n;
  r.m = c.m;
  r.alpha = c.alpha;
  r.value = z.estimate.value;
  r.stderr = z.estimate.stderr;
  r.note = zeta::to_string(z.path) + (z.ell > 0 ? " ell=" + std::to_string(z.ell) : "");
  if (name == "gaussian") {
    const complex ref = zeta::gaussian_zeta_closed_form(c.n, c.m, c.alpha);
    r.reference = ref;
    r.sigma = sigma_distance(r.value, ref, r.stderr);
    r.pass = *r.sigma <= suites::kSigmaBound;
  }
  rep.checks.push_back(r);
}

void run_rankone(const RunConfig& c, const McOptions& mc, SuiteReport& rep) {
  suites::Case s = make_case(c, mc);
  s.m = 1;
  s.k = 1;
  require(c.n >= 2, "rankone needs n >= 2");
  const std::string& sub = c.subcommand;
  if (sub == "multiplier") {
    for (auto& r : suites::rankone_multiplier(s, c.j_max.value_or(6))) rep.checks.push_back(r);
  } else if (sub == "compose") {
    std::vector<complex> grid = c.lambda_grid;
    if (grid.empty()) grid = {0.3, -0.3, 1.2, -1.2, {0.5, 0.5}};
    rep.checks.push_back(suites::rankone_compose(c.n, c.j_max.value_or(40), grid));
  } else if (sub == "funk") {
    require(c.n >= 3, "rankone funk needs n >= 3");
    require(c.j >= 0 && c.j % 2 == 0, "rankone funk needs an even j >= 0");
    for (auto& r : suites::rankone_funk(s, c.j)) rep.checks.push_back(r);
  } else if (sub == "decay") {
    rep.checks.push_back(suites::rankone_decay(c.n, c.alpha, c.j_max.value_or(400)));
  } else {
    throw ConfigError("rankone subcommand must be one of multiplier, compose, funk, decay");
  }
}

void run_sample(const RunConfig& c, SuiteReport& rep) {
  require(c.count >= 1, "count must be >= 1");
  const std::vector<Frame> frames = haar_frames(SeededRng(c.seed), c.n, c.m, c.count);
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < frames.size(); ++i) {
    arr.push_back(frame_to_json(frames[i]));
    CheckRecord r;
    r.name = "frame " + std::to_string(i) + " orthonormality";
    r.tag = "orthonormality";
    r.n = c.n;
    r.m = c.m;
    const double err = orthonormality_error(frames[i].matrix());
    r.value = err;
    r.reference = 0.0;
    r.residual = err;
    r.tolerance = kFrameTol;
    r.pass = err <= kFrameTol;
    rep.checks.push_back(r);
  }
  rep.data = {{"frames", arr}};
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  RunResult res;
  res.report.command = cfg.command;
  res.report.seed = cfg.seed;
  res.report.timestamp = utc_timestamp();
  try {
    validate_common(cfg);
    McOptions mc = default_mc_options();
    mc.workers = cfg.workers;
    if (cfg.command == "transform") run_transform(cfg, mc, res.report);
    else if (cfg.command == "identity") run_identity(cfg, mc, res.report);
    else if (cfg.command == "table") run_table(cfg, res.report);
    else if (cfg.command == "zeta") run_zeta(cfg, mc, res.report);
    else if (cfg.command == "rankone") run_rankone(cfg, mc, res.report);
    else run_sample(cfg, res.report);
  } catch (const Error& e) {
    res.exit_code = 2;
    res.error = e.what();
    return res;
  }
  res.exit_code = res.report.all_pass() ? 0 : 1;
  res.output = format_report(res.report, cfg.format);
  return res;
}

}  // namespace stiefel::cli
