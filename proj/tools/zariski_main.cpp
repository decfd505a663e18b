#include <iostream>
#include <string>
#include <vector>

#include "zariski/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return zariski::cli::run(args, std::cout, std::cerr);
}
