#include <iostream>

#include "acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : kleinsig::run_acceptance()) {
    std::cout << kleinsig::format_result(r) << std::endl;
    failed += !r.pass;
  }
  return failed ? 1 : 0;
}
