#include <iostream>

#include "sqcc/cli.hpp"

int main(int argc, char** argv) {
  return sqcc::run_cli(argc, argv, std::cout, std::cerr);
}
