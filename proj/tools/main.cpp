#include <iostream>

#include "toric/cli.hpp"

int main(int argc, char** argv) {
  const auto result = toric::cli::run(argc, argv);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
