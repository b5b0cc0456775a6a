#include <iostream>
#include <string>
#include <vector>

#include "drobust/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return drobust::cli::run(args, std::cout, std::cerr);
}
