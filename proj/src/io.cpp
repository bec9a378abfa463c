#include "stiefel/io.hpp"

#include "stiefel/error.hpp"

namespace stiefel {

nlohmann::json complex_to_json(std::complex<double> z) { return nlohmann::json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ConfigError("complex value must be a number or [re, im]");
}

nlohmann::json frame_to_json(const Frame& f) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < f.n(); ++i) {
    for (int j = 0; j < f.m(); ++j) entries.push_back(f.matrix()(i, j));
  }
  return {{"n", f.n()}, {"m", f.m()}, {"entries", entries}};
}

Frame frame_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int m = j.at("m").get<int>();
    const auto& e = j.at("entries");
    if (n < 1 || m < 1 || m > n) throw DimensionError("frame needs 1 <= m <= n");
    if (!e.is_array() || e.size() != static_cast<std::size_t>(n * m)) {
      throw ConfigError("frame entries must hold n * m numbers");
    }
    Matrix a(n, m);
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < m; ++c) a(i, c) = e[static_cast<std::size_t>(i * m + c)].get<double>();
    }
    return Frame::from_matrix(a);
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("invalid frame JSON: ") + ex.what());
  }
}

nlohmann::json estimate_to_json(const MCEstimate& e) {
  return {{"value", complex_to_json(e.value)},
          {"stderr", e.stderr},
          {"n_samples", e.n_samples},
          {"rejected", e.rejected},
          {"degenerate", e.degenerate}};
}

MCEstimate estimate_from_json(const nlohmann::json& j) {
  try {
    MCEstimate e;
    e.value = complex_from_json(j.at("value"));
    e.stderr = j.at("stderr").get<double>();
    e.n_samples = j.at("n_samples").get<std::size_t>();
    e.rejected = j.value("rejected", std::size_t{0});
    e.degenerate = j.value("degenerate", false);
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("invalid estimate JSON: ") + ex.what());
  }
}

nlohmann::json request_to_json(const TransformRequest& r) {
  return {{"kind", to_string(r.kind)}, {"n", r.n},
          {"m", r.m},                  {"k", r.k},
          {"alpha", complex_to_json(r.alpha.value())},
          {"n_samples", r.n_samples},  {"seed", r.seed}};
}

TransformRequest request_from_json(const nlohmann::json& j) {
  try {
    TransformRequest r;
    r.kind = transform_kind_from_string(j.at("kind").get<std::string>());
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.k = j.value("k", r.m);
    r.alpha = complex_from_json(j.at("alpha"));
    r.n_samples = j.value("n_samples", std::size_t{0});
    r.seed = j.value("seed", std::uint64_t{0});
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("invalid transform request JSON: ") + ex.what());
  }
}

}  // namespace stiefel
