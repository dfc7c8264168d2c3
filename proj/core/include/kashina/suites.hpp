#pragma once

#include "kashina/report.hpp"

namespace kashina {

// Named verification suites behind the CLI. Deterministic record order;
// byte-stable reports for fixed inputs.
std::vector<CheckRecord> suite_verify_h();
std::vector<CheckRecord> suite_verify_double();
std::vector<CheckRecord> suite_census();
std::vector<CheckRecord> suite_yd();
std::vector<CheckRecord> suite_nichols();
std::vector<CheckRecord> suite_bosonize();
std::vector<CheckRecord> suite_lift();
std::vector<CheckRecord> suite_all();

// suite registry for `run_suite`; throws std::invalid_argument on unknown names
std::vector<std::string> suite_names();
std::vector<CheckRecord> run_suite(const std::string& name);

}  // namespace kashina
