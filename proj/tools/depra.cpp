#include <iostream>
#include <string>
#include <vector>

#include "depra/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return depra::run_cli(args, std::cout, std::cerr);
}
