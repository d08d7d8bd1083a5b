#include <iostream>
#include <string>
#include <vector>

#include "qspec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qspec::run_cli(args, std::cout, std::cerr, std::cin);
}
