#include <iostream>

#include "longmul/cli.hpp"

int main(int argc, char** argv) { return longmul::cli::run(argc, argv, std::cout, std::cerr); }
