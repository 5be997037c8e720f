#include "lcstruct/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return lcstruct::cli::main(argc, argv, std::cout, std::cerr);
}
