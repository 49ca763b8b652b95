#include <iostream>

#include "sutured/cli.hpp"

int main(int argc, char** argv) { return sutured::cli::run(argc, argv, std::cout, std::cerr); }
