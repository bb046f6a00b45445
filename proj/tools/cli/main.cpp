#include <iostream>

#include "cct/cli/commands.hpp"

int main(int argc, char** argv) { return cct::cli::run_main(argc, argv, std::cout, std::cerr); }
