#ifndef SLICEREG_VERIFY_HPP
#define SLICEREG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "slicereg/growth.hpp"

namespace slicereg {

/// One verification criterion: a short label plus its report rows.
struct CriterionResult {
  int index;
  std::string label;
  std::vector<CheckRow> rows;
  bool pass;
};

struct VerifyReport {
  std::vector<CriterionResult> criteria;
  std::vector<CheckRow> rows;  // flattened
  bool all_pass = false;
  std::string csv;
  std::string summary_json;
};

/// Runs the whole verification suite under a fixed seed. The report strings
/// are deterministic functions of the seed (criterion 10 runs the suite body
/// twice and compares bytes).
VerifyReport run_verification(std::uint64_t seed);

}  // namespace slicereg

#endif
