#include <iostream>

#include "hessgkm/cli/cli.hpp"

int main(int argc, char** argv) { return hessgkm::cli::run(argc, argv, std::cout, std::cerr); }
