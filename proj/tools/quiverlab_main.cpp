#include <iostream>
#include <string>
#include <vector>

#include "quiverlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return quiverlab::run_cli(args, std::cout, std::cerr);
}
