#include <iostream>

#include "gbu/cli.hpp"

int main(int argc, char** argv) { return gbu::run_cli(argc, argv, std::cout, std::cerr); }
