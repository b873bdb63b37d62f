#include <iostream>

#include "lfvo/cli.hpp"

int main(int argc, char** argv) { return lfvo::cli::run(argc, argv, std::cout, std::cerr); }
