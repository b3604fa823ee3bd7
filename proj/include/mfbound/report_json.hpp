#pragma once

#include <json.hpp>

#include "mfbound/bounds.hpp"
#include "mfbound/experiment.hpp"

namespace mfbound {

/// {"method", "value", "argmax_t", "argmax_mu": [re, im], "grid", "norm",
///  "warnings"}; absent argmax fields are null.
nlohmann::json to_json(const BoundReport& r);

nlohmann::json to_json(const ExperimentStats& s);

}  // namespace mfbound
