#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "cutcx/acceptance.hpp"

int main(int argc, char** argv) {
  int jobs = 1;
  if (argc > 1) jobs = std::atoi(argv[1]);
  auto results = cutcx::acceptance::run_all(jobs);
  bool all = true;
  for (const auto& r : results) {
    std::cout << "[" << std::setw(2) << r.id << "/13] " << (r.pass ? "PASS" : "FAIL")
              << "  " << r.name << "  (" << std::fixed << std::setprecision(2)
              << r.seconds << "s)";
    if (!r.pass) std::cout << "  -- " << r.detail;
    std::cout << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES present")
            << std::endl;
  return all ? 0 : 1;
}
