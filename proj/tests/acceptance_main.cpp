#include <iostream>

#include "vtangle/selftest.hpp"

int main() {
  auto results = vtangle::run_acceptance(std::cout);
  return vtangle::all_passed(results) ? 0 : 1;
}
