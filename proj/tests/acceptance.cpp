// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <cstring>
#include <iostream>

#include "spinbeam/verify.hpp"

int main(int argc, char** argv) {
  const bool fast = argc > 1 && std::strcmp(argv[1], "--fast") == 0;
  int failed = 0;
  spinbeam::run_acceptance(fast ? spinbeam::Suite::Fast : spinbeam::Suite::Full, [&](const auto& result) {
    spinbeam::print_result(std::cout, result);
    std::cout.flush();
    if (!result.passed()) ++failed;
  });
  std::cout << (failed ? "FAILED: " : "all criteria passed") ;
  if (failed) std::cout << failed << " criteria";
  std::cout << '\n';
  return failed ? 1 : 0;
}
