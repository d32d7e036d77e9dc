// Acceptance suite: runs every verification criterion at its pinned
// tolerance and prints one pass/fail line per criterion.

#include <cstdio>

#include "slicereg/verify.hpp"

int main() {
  slicereg::VerifyReport rep = slicereg::run_verification(7);
  for (const auto& c : rep.criteria) {
    std::printf("%s criterion %d: %s\n", c.pass ? "[PASS]" : "[FAIL]", c.index, c.label.c_str());
    if (!c.pass)
      for (const auto& r : c.rows)
        if (!r.pass)
          std::printf("      failed: %s (%s) lhs=%.12g rhs=%.12g\n", r.name.c_str(),
                      r.params.c_str(), r.lhs, r.rhs);
  }
  std::printf("%s\n", rep.summary_json.c_str());
  return rep.all_pass ? 0 : 1;
}
