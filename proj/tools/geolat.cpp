#include <iostream>
#include <string>
#include <vector>

#include "geolat/cli_io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return geolat::run_cli(args, std::cin, std::cout, std::cerr);
}
