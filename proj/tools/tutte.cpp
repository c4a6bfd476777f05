#include <iostream>

#include "tutte/cli.hpp"

int main(int argc, char** argv) { return tutte::cli::main(argc, argv, std::cout, std::cerr); }
