#include <iostream>

#include "wga/cli.hpp"

int main(int argc, char** argv) { return wga::cli::run(argc, argv, std::cout, std::cerr); }
