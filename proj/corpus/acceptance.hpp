#pragma once

#include <functional>
#include <string>
#include <vector>

namespace kleinsig {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Criterion {
  int id;
  std::string title;
  std::function<CriterionResult()> run;
};

const std::vector<Criterion>& acceptance_criteria();
std::vector<CriterionResult> run_acceptance();
std::string format_result(const CriterionResult& r);

}  // namespace kleinsig
