#include <iostream>
#include <string>
#include <vector>

#include "scrollar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return scrollar::run_cli(args, std::cout, std::cerr);
}
