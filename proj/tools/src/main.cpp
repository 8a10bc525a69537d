#include "g2holo/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return g2holo::cli::run(args, std::cin, std::cout, std::cerr);
}
