#include <iostream>

#include "chibound_cli/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return chibound::cli::cli_main({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
