#include <iostream>

#include "fpcyc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fpcyc::cli::run(args, std::cout, std::cerr);
}
