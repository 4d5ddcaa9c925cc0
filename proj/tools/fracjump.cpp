#include <iostream>

#include "fracjump/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return fracjump::run_cli(argc, argv, std::cout, std::cerr);
}
