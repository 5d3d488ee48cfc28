#include <iostream>

#include "mixmult/cli.hpp"

int main(int argc, char** argv) { return mixmult::cli::main(argc, argv, std::cout, std::cerr); }
