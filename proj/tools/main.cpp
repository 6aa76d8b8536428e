#include <iostream>

#include "satcore/cli.hpp"

int main(int argc, char** argv) { return satcore::cli_main(argc, argv, std::cin, std::cout, std::cerr); }
