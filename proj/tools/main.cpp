#include <potconst/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return potconst::cli::main_entry(argc, argv, std::cout, std::cerr); }
