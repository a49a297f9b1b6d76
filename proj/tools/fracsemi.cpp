#include <iostream>

#include "fracsemi/cli.hpp"

int main(int argc, char** argv) { return fracsemi::cli::main_entry(argc, argv, std::cout, std::cerr); }
