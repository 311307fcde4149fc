#include <iostream>

#include "pgs/cli.hpp"

int main(int argc, char** argv) { return pgs::cli::run(argc, argv, std::cout, std::cerr); }
