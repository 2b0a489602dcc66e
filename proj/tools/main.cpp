#include <iostream>
#include <string>
#include <vector>

#include "pedalwords/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pedalwords::cli::run(args, std::cout, std::cerr);
}
