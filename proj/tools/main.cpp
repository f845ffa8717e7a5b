#include <iostream>

#include "zsindex/cli.hpp"

int main(int argc, char** argv) { return zsindex::cli::run(argc, argv, std::cout, std::cerr); }
