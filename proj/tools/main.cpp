#include <iostream>

#include "edgeideal/cli.hpp"

int main(int argc, char** argv) { return edgeideal::run_cli(argc, argv, std::cout, std::cerr); }
