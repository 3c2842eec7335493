#include <iostream>

#include "descents/cli.hpp"

int main(int argc, char** argv) {
  return descents::run_cli(argc, argv, std::cout, std::cerr);
}
