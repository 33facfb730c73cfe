#include <iostream>
#include <string>
#include <vector>

#include "hypk_tools/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return hypk::tools::run_cli(args, std::cout, std::cerr);
}
