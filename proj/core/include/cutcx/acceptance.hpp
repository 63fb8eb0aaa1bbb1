#ifndef CUTCX_ACCEPTANCE_HPP
#define CUTCX_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cutcx::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// The full battery, ids 1..13. Criteria are independent; jobs > 1 runs them
/// concurrently with output order preserved.
std::vector<CriterionResult> run_all(int jobs = 1, std::uint64_t seed = 0xC0FFEE);

CriterionResult run_one(int id, std::uint64_t seed = 0xC0FFEE);

}  // namespace cutcx::acceptance

#endif
