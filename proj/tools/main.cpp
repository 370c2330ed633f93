#include <iostream>

#include "starr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return starr::run_command(args, std::cout, std::cerr);
}
