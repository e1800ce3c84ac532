#include <iostream>
#include <string>
#include <vector>

#include "flagdescent/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flagdescent::cli::run(args, std::cout, std::cerr);
}
