#include <iostream>
#include <string>
#include <vector>

#include "mubkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mubkit::cli::run(args, std::cout, std::cerr);
}
