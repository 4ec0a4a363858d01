#include <iostream>
#include <string>
#include <vector>

#include "cesaro/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cesaro::cli::run(args, std::cout, std::cerr);
}
