#include <iostream>
#include <string>
#include <vector>

#include "burstkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return burstkit::run_cli(args, std::cout, std::cerr);
}
