#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vtangle {

struct MoveCheck {
  std::string move;
  std::string variant;
  bool pass;
  std::string detail;
};

// Evaluates both sides of every relation in the move library under the
// built-in datum; exact matrix comparison.
std::vector<MoveCheck> run_relation_suite();

struct CriterionResult {
  int number;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

// The acceptance suite; prints one pass/fail line per criterion to `log`.
std::vector<CriterionResult> run_acceptance(std::ostream& log);
bool all_passed(const std::vector<CriterionResult>& results);

// The fixed closed-diagram corpus (Gauss codes) used by the suite.
const std::vector<std::pair<std::string, std::string>>& corpus_codes();

}  // namespace vtangle
