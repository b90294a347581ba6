#include <iostream>
#include <string>
#include <vector>

#include "gl3sw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gl3sw::run_cli(args, std::cout, std::cerr);
}
