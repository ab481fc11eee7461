#include <iostream>

#include "aecc/cli/commands.hpp"

int main(int argc, char** argv) { return aecc::cli::run(argc, argv, std::cout, std::cerr); }
