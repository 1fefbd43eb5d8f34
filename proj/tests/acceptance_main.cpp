// Acceptance suite: one pass/fail line per criterion.
#include <iostream>
#include <thread>

#include "klq/verify.hpp"

int main() {
  klq::verify::Options options;
  const unsigned hw = std::thread::hardware_concurrency();
  options.threads = hw == 0 ? 2 : static_cast<int>(hw > 8 ? 8 : hw);
  const auto checks = klq::verify::core_suite(options);
  const int failures = klq::verify::print_report(checks, std::cout);
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
