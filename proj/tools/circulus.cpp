#include <iostream>

#include "circulus/cli.hpp"

int main(int argc, char** argv) { return circulus::cli::run(argc, argv, std::cout, std::cerr); }
