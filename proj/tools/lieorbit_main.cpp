#include <iostream>
#include <vector>

#include "lieorbit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lieorbit::cli::run(args, std::cout, std::cerr);
}
