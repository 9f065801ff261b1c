#include <iostream>

#include "holr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return holr::cli::run(args, std::cout, std::cerr);
}
