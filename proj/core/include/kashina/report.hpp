#pragma once

#include <string>
#include <vector>

namespace kashina {

enum class CheckStatus { pass, fail, evidence };

// One verification outcome. "evidence" is reserved for non-certifying results
// (e.g. growth evidence for infinite dimension); it does not count as a failure.
struct CheckRecord {
  std::string suite;
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string payload;  // witness, counts, first violation; JSON-compatible text
};

inline CheckRecord pass_record(std::string suite, std::string name, std::string payload = "") {
  return {std::move(suite), std::move(name), CheckStatus::pass, std::move(payload)};
}
inline CheckRecord fail_record(std::string suite, std::string name, std::string payload = "") {
  return {std::move(suite), std::move(name), CheckStatus::fail, std::move(payload)};
}
inline CheckRecord record(std::string suite, std::string name, bool ok, std::string payload = "") {
  return {std::move(suite), std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(payload)};
}

inline bool all_pass(const std::vector<CheckRecord>& rs) {
  for (const auto& r : rs)
    if (r.status == CheckStatus::fail) return false;
  return true;
}

std::string to_json(const std::vector<CheckRecord>& records);

}  // namespace kashina
