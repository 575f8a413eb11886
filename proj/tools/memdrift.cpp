#include <iostream>
#include <string>
#include <vector>

#include "memdrift/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return memdrift::run_main(args, std::cout, std::cerr);
}
