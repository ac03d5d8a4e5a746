#include <iostream>

#include "derlab/acceptance.hpp"

int main() {
  int failures = derlab::acceptance::run(std::cout);
  if (failures) std::cout << failures << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
