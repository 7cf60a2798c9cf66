#include <iostream>

#include "tropos/cli.hpp"

int main(int argc, char** argv) { return tropos::cli::main_entry(argc, argv, std::cout, std::cerr); }
