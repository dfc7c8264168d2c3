#include "kashina/report.hpp"

#include <json.hpp>

namespace kashina {

std::string to_json(const std::vector<CheckRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["name"] = r.name;
    j["status"] = r.status == CheckStatus::pass ? "pass" : (r.status == CheckStatus::fail ? "fail" : "evidence");
    if (!r.payload.empty()) j["payload"] = r.payload;
    arr.push_back(std::move(j));
  }
  return arr.dump(1);
}

}  // namespace kashina
