#include <iostream>

#include "magnus/cli.hpp"

int main(int argc, char** argv) {
  return magnus::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
