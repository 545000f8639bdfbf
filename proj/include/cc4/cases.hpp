#pragma once

#include <string>
#include <vector>

#include "cc4/certificate.hpp"

namespace cc4 {

// One entry of the case registry: a named finiteness subcase together with
// the verdict its certificate is expected to reach.
struct CaseInfo {
  std::string id;
  Verdict expected;
  std::string summary;
};

const std::vector<CaseInfo>& registered_cases();

// Builds the branch systems for the named case, runs the certification
// pipeline, and returns the replayable certificate. Throws on unknown ids.
Certificate run_case(const std::string& id);

}  // namespace cc4
