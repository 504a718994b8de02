#include <iostream>

#include "umeb/cli.hpp"

int main(int argc, char** argv) { return umeb::cli::run(argc, argv, std::cout, std::cerr); }
