#include "cmap/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cmap::run_cli(argc, argv, std::cout, std::cerr); }
