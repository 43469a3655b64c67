#include <iostream>

#include "linetrees/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return linetrees::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
