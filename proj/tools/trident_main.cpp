#include <iostream>

#include "trident/cli.hpp"

int main(int argc, char** argv) {
  return trident::cli::run(argc, argv, std::cout, std::cerr);
}
