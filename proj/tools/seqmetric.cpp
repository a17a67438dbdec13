#include <iostream>

#include "seqmetric/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return seqmetric::run_cli(args, std::cout, std::cerr);
}
