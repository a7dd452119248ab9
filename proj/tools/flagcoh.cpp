#include <iostream>
#include <string>
#include <vector>

#include "flagcoh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flagcoh::run_cli(args, std::cout, std::cerr);
}
