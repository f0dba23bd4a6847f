#include "mb/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace mb {

using nlohmann::json;

std::string decimal_string(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return std::stod(j.get<std::string>());
  throw std::domain_error("expected a number or decimal string");
}

json weight_to_json(const WeightSpec& w) {
  json params;
  switch (w.family) {
    case WeightFamily::laguerre: params["a"] = decimal_string(w.p1); break;
    case WeightFamily::jacobi:
      params["a"] = decimal_string(w.p1);
      params["b"] = decimal_string(w.p2);
      break;
    case WeightFamily::jacobi_prime:
      params["alpha"] = decimal_string(w.p1);
      params["beta"] = decimal_string(w.p2);
      break;
    case WeightFamily::gen_gaussian: params["c"] = decimal_string(w.p1); break;
    case WeightFamily::gen_sym_jacobi:
    case WeightFamily::gen_cauchy:
      params["c"] = decimal_string(w.p1);
      params["alpha"] = decimal_string(w.p2);
      break;
  }
  return json{{"family", family_name(w.family)}, {"params", params}};
}

WeightSpec weight_from_json(const json& j) {
  WeightSpec w;
  w.family = family_from_name(j.at("family").get<std::string>());
  const json& params = j.at("params");
  switch (w.family) {
    case WeightFamily::laguerre: w.p1 = number_from_json(params.at("a")); break;
    case WeightFamily::jacobi:
      w.p1 = number_from_json(params.at("a"));
      w.p2 = number_from_json(params.at("b"));
      break;
    case WeightFamily::jacobi_prime:
      w.p1 = number_from_json(params.at("alpha"));
      w.p2 = number_from_json(params.at("beta"));
      break;
    case WeightFamily::gen_gaussian: w.p1 = number_from_json(params.at("c")); break;
    case WeightFamily::gen_sym_jacobi:
    case WeightFamily::gen_cauchy:
      w.p1 = number_from_json(params.at("c"));
      w.p2 = number_from_json(params.at("alpha"));
      break;
  }
  w.validate();
  return w;
}

json ensemble_to_json(const EnsembleSpec& spec) {
  return json{{"weight", weight_to_json(spec.weight)},
              {"n", spec.n},
              {"theta", decimal_string(spec.theta)}};
}

EnsembleSpec ensemble_from_json(const json& j) {
  EnsembleSpec spec;
  spec.weight = weight_from_json(j.at("weight"));
  spec.n = j.at("n").get<int>();
  spec.theta = number_from_json(j.at("theta"));
  spec.validate();
  return spec;
}

json poly_to_json(const MonicPoly& p, const WeightSpec& w, double theta, int k, Side side) {
  json coeffs = json::array();
  for (double c : p.coeffs) coeffs.push_back(decimal_string(c));
  return json{{"weight", weight_to_json(w)},
              {"theta", decimal_string(theta)},
              {"k", k},
              {"side", side == Side::p ? "p" : "q"},
              {"coeffs", coeffs}};
}

}  // namespace mb
