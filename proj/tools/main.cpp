#include <iostream>
#include <string>
#include <vector>

#include "arguesia/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return arguesia::run_cli(args, std::cout, std::cerr);
}
