#include <iostream>
#include <string>
#include <vector>

#include "einobs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return einobs::cli::run(args, std::cout, std::cerr);
}
