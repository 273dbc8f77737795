#include <iostream>
#include <string>
#include <vector>

#include "hexisr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hexisr::cli::run(args, std::cout, std::cerr);
}
