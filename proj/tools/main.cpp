#include <iostream>

#include "enumorder_cli/commands.hpp"

int main(int argc, char** argv) { return enumorder::cli::run(argc, argv, std::cout, std::cerr); }
