#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return toricset::cli::run(argc, argv, std::cout, std::cerr); }
