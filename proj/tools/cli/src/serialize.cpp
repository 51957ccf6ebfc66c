#include "gw/cli/serialize.hpp"

namespace gw::cli {

nlohmann::json state_to_json(const State& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : s) {
    nlohmann::json modes = nlohmann::json::array();
    for (const auto& mode : m.modes()) {
      modes.push_back({std::string(kind_name(mode.kind)), mode.flavor, mode.index});
    }
    terms.push_back({{"modes", std::move(modes)}, {"coeff", to_string(c)}});
  }
  return {{"terms", std::move(terms)}};
}

nlohmann::json dims_to_json(const CohomologyTable& table) {
  nlohmann::json dims = nlohmann::json::object();
  for (const auto& [key, entry] : table) {
    dims[std::to_string(key.first) + "," + std::to_string(key.second)] = entry.dim;
  }
  return {{"dims", std::move(dims)}};
}

nlohmann::json ope_to_json(const std::map<int, State>& poles) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [n, value] : poles) out[std::to_string(n)] = state_to_json(value);
  return {{"poles", std::move(out)}};
}

}  // namespace gw::cli
