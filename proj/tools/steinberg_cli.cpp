#include "steinberg/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return steinberg::cli::main(argc, argv, std::cout, std::cerr); }
