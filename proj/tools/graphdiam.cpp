#include <iostream>

#include "graphdiam/cli.hpp"

int main(int argc, char** argv) {
  return graphdiam::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
