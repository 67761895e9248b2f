#include <iostream>

#include "sudotrans/cli.hpp"

int main(int argc, char** argv) {
  return sudotrans::cli::run_main(argc, argv, std::cin, std::cout, std::cerr);
}
