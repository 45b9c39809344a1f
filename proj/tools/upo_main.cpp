#include <iostream>
#include <vector>

#include "upo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return upo::cli_main(args, std::cin, std::cout, std::cerr);
}
