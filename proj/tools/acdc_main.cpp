#include <iostream>

#include "acdc/cli.hpp"

int main(int argc, char** argv) {
  return acdc::run_cli(argc, argv, std::cout, std::cerr);
}
