#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace toric3::cli {

using Json = nlohmann::ordered_json;

enum class Tier { Fast, Long };

struct VerifyOptions {
  unsigned threads = 1;
  bool long_tier = false;  // also run the long expectations
};

// Expected values are plain JSON, or {"at_least": v}, or {"approx": v, "tol": t}.
struct Check {
  std::string suite, id, source;
  Tier tier = Tier::Fast;
  Json expected, actual;
  bool pass = false;
  std::string error;  // set when the computation threw
};

const std::vector<std::string>& suite_names();
// throws std::invalid_argument for an unknown suite
std::vector<Check> run_suite(const std::string& name, const VerifyOptions& opt);

bool matches(const Json& expected, const Json& actual);
Json to_json(const Check& c);

}  // namespace toric3::cli
