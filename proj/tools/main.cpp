#include <iostream>
#include <string>
#include <vector>

#include "kham/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kham::run(args, std::cout, std::cerr);
}
