#include <iostream>

#include "maro/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return maro::cli::run(args, std::cout, std::cerr);
}
