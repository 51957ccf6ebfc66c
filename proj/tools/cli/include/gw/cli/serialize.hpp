#pragma once

#include <map>

#include <nlohmann/json.hpp>

#include "gw/brst.hpp"
#include "gw/state.hpp"

namespace gw::cli {

/// {"terms":[{"modes":[["kind",flavor,index],...],"coeff":"p/q"},...]} in
/// monomial order.
nlohmann::json state_to_json(const State& s);

/// {"dims":{"i,j":n,...}}
nlohmann::json dims_to_json(const CohomologyTable& table);

nlohmann::json ope_to_json(const std::map<int, State>& poles);

}  // namespace gw::cli
