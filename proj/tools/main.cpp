#include <iostream>

#include "cfcolor_cli/cli.hpp"

int main(int argc, char** argv) { return cfc::cli::run(argc, argv, std::cout, std::cerr); }
