#include <iostream>

#include "pec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pec::cli::run(args, std::cout, std::cerr);
}
