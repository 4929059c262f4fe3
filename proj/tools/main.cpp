#include <iostream>
#include <string>
#include <vector>

#include "graphgroups/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return graphgroups::cli::run(args, std::cout, std::cerr);
}
