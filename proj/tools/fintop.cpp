#include <iostream>

#include "fintop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fintop::cli::run(args, std::cout, std::cerr);
}
