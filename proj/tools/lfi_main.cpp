#include <iostream>

#include "lfi/cli.hpp"

int main(int argc, char** argv) { return lfi::run_cli(argc, argv, std::cout, std::cerr); }
