#include <iostream>
#include <vector>

#include "kord/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kord::run_cli(args, std::cout, std::cerr);
}
