#include <iostream>
#include <string>
#include <vector>

#include "nilcomplete/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nilc::cli::run_cli(args, std::cout, std::cerr);
}
