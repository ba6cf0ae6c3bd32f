#include <iostream>
#include <string>
#include <vector>

#include "kint/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kint::cli::dispatch(args, std::cout, std::cerr);
}
