#include <iostream>

#include "desargues/cli.hpp"

int main(int argc, char** argv) {
  return desargues::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
