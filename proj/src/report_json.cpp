#include "mfbound/report_json.hpp"

namespace mfbound {

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["method"] = to_string(r.method);
  j["value"] = r.value;
  j["argmax_t"] = r.argmax_t ? nlohmann::json(*r.argmax_t) : nlohmann::json(nullptr);
  j["argmax_mu"] = r.argmax_mu ? nlohmann::json::array({r.argmax_mu->real(), r.argmax_mu->imag()})
                               : nlohmann::json(nullptr);
  j["grid"] = {{"t_count", r.t_count}, {"per_edge", r.per_edge}};
  if (r.coarse_value) j["grid"]["coarse_value"] = *r.coarse_value;
  j["norm"] = r.norm_name;
  j["warnings"] = r.warnings;
  return j;
}

nlohmann::json to_json(const ExperimentStats& s) {
  return {
      {"kept", s.kept},
      {"excluded_count", s.excluded_count},
      {"invalid_count", s.invalid_count},
      {"e0_mean", s.e0_mean},
      {"e0_std", s.e0_std},
      {"e1_mean", s.e1_mean},
      {"e1_std", s.e1_std},
      {"ratio_mean", s.ratio_mean},
      {"ratio_std", s.ratio_std},
      {"ratio_median", s.ratio_median},
      {"kappa_mean_kept", s.kappa_mean_kept},
      {"kappa_std_kept", s.kappa_std_kept},
      {"kappa_mean_all", s.kappa_mean_all},
      {"kappa_std_all", s.kappa_std_all},
  };
}

}  // namespace mfbound
