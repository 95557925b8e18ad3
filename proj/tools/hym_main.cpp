#include <iostream>
#include <string>
#include <vector>

#include "hym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hym::cli::run(args, std::cout, std::cerr);
}
