#pragma once

#include <complex>

#include <json.hpp>

#include "stiefel/manifold.hpp"
#include "stiefel/monte_carlo.hpp"
#include "stiefel/transforms.hpp"

namespace stiefel {

/// [re, im]; a plain number parses as a real value.
nlohmann::json complex_to_json(std::complex<double> z);
std::complex<double> complex_from_json(const nlohmann::json& j);

/// {"n", "m", "entries"} with entries row-major.
nlohmann::json frame_to_json(const Frame& f);
Frame frame_from_json(const nlohmann::json& j);

nlohmann::json estimate_to_json(const MCEstimate& e);
MCEstimate estimate_from_json(const nlohmann::json& j);

nlohmann::json request_to_json(const TransformRequest& r);
TransformRequest request_from_json(const nlohmann::json& j);

}  // namespace stiefel
