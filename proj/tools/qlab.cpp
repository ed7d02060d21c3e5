#include <iostream>

#include "qlab/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qlab::cli::run(std::move(args), std::cout, std::cerr);
}
