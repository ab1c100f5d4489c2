#include <iostream>
#include <string>
#include <vector>

#include "betacount/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return betacount::run_cli(args, std::cin, std::cout, std::cerr);
}
