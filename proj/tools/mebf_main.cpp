#include <iostream>
#include <string>
#include <vector>

#include "mebf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mebf::cli::run(args, std::cout, std::cerr);
}
