#include <iostream>

#include "klsum/cli.hpp"

int main(int argc, char** argv) { return klsum::cli::run_cli(argc, argv, std::cout, std::cerr); }
