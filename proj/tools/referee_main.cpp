#include <iostream>
#include <string>
#include <vector>

#include "referee/cli.hpp"

int main(int argc, char* argv[]) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return referee::run_cli(args, std::cout, std::cerr);
}
