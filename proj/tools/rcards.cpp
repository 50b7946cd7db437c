#include <iostream>
#include <string>
#include <vector>

#include "rcards/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rcards::run_cli(args, std::cout, std::cerr);
}
