#include <iostream>

#include "flagvar/cli.hpp"

int main(int argc, char** argv) { return flagvar::cli::run(argc, argv, std::cout, std::cerr); }
