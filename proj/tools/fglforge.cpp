#include <iostream>

#include "fglforge/cli.hpp"

int main(int argc, char** argv) { return fglforge::run_cli(argc, argv, std::cout, std::cerr); }
