#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const auto result = realreg::cli::run(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << result.output;
  return result.exit_code;
}
