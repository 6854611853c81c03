#include <iostream>

#include "knotsig_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return knotsig::cli::run(args, std::cout, std::cerr);
}
