#include <iostream>

#include "nilpat/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nilpat::cli::run(args, std::cout, std::cerr);
}
