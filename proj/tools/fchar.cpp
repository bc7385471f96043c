#include <iostream>
#include <string>
#include <vector>

#include "fchar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fchar::cli::run(args, std::cout, std::cerr);
}
