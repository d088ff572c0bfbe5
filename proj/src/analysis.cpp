#include "rscram/analysis.hpp"

#include <nlohmann/json.hpp>

namespace rscram {

std::string CheckReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["params"] = params_json.empty() ? nlohmann::json::object()
                                    : nlohmann::json::parse(params_json);
  j["trials"] = trials;
  j["failures"] = failures;
  j["pass"] = pass;
  return j.dump();
}

}  // namespace rscram
