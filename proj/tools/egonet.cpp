#include <iostream>

#include "egonet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return egonet::cli::run(args, std::cerr);
}
