#pragma once

#include "spherical/weight.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spherical {

struct Mismatch {
  std::string stage;
  int grade = 0;
  Weight mu;
  std::string expected, got;
};

struct StageResult {
  std::string name;
  int grade_lo = 0, grade_hi = 0;
  std::size_t terms_checked = 0;
  bool pass = true;
};

struct VerifyReport {
  std::string check;
  int n = 0;
  bool pass = true;
  std::vector<StageResult> stages;
  std::optional<Mismatch> first_mismatch;
  double seconds = 0;
};

}  // namespace spherical
