#include <iostream>

#include "spatch/cli.hpp"

int main(int argc, char** argv) {
  return spatch::run_cli(argc, argv, std::cout, std::cerr);
}
