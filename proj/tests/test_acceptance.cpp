#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = proet::acceptance::kDefaultSeed;
  if (argc > 1) seed = std::stoull(argv[1]);
  std::size_t failed = 0;
  proet::acceptance::run_all(seed, [&](const proet::acceptance::CriterionResult& r) {
    failed += !r.pass;
    std::cout << proet::acceptance::format_line(r) << "  (" << std::fixed << std::setprecision(2) << r.seconds << " s";
    if (r.time_limit > 0) std::cout << " of " << r.time_limit << " s";
    std::cout << ")" << std::endl;
  });
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
