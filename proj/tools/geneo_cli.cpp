#include <iostream>
#include <string>
#include <vector>

#include "geneo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return geneo::run_cli(args, std::cout, std::cerr);
}
