#include <iostream>

#include "diffop/cli.hpp"

int main(int argc, char** argv) {
  return diffop::run_cli(argc, argv, std::cout, std::cerr);
}
