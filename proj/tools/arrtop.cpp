#include <iostream>

#include "arrtop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return arrtop::run_cli(args, std::cout, std::cerr);
}
