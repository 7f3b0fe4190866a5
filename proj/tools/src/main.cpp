#include <iostream>
#include <string>
#include <vector>

#include "jgap_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jgap::cli::run(args, std::cout, std::cerr);
}
