#pragma once

#include <string>

#include <json.hpp>

#include "mb/biortho.hpp"
#include "mb/weights.hpp"

namespace mb {

/// Decimal string with 17 significant digits; re-parsing is lossless to
/// double precision.
std::string decimal_string(double v);

/// {"family": <name>, "params": {...}}, params as decimal strings.
nlohmann::json weight_to_json(const WeightSpec& w);
WeightSpec weight_from_json(const nlohmann::json& j);

nlohmann::json ensemble_to_json(const EnsembleSpec& spec);
EnsembleSpec ensemble_from_json(const nlohmann::json& j);

/// {"weight": ..., "theta": t, "k": k, "side": "p"|"q",
///  "coeffs": [decimal strings, constant first]}
nlohmann::json poly_to_json(const MonicPoly& p, const WeightSpec& w, double theta, int k,
                            Side side);

/// Parses a JSON number or decimal string.
double number_from_json(const nlohmann::json& j);

}  // namespace mb
