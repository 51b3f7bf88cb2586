#include <iostream>
#include <string>
#include <vector>

#include "oblivnet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return oblivnet::run_cli(args, std::cout, std::cerr);
}
