#include <iostream>
#include <string>
#include <vector>

#include "hypertour/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hypertour::run_cli(args, std::cout, std::cerr);
}
