#include <iostream>
#include <string>
#include <vector>

#include "hesse/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hesse::cli::run(args, std::cout, std::cerr);
}
