#include <iostream>
#include <string>
#include <vector>

#include "jaccoord/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return jaccoord::cli::run(args, std::cout, std::cerr);
}
