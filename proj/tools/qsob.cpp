#include <iostream>

#include "qsob/cli.hpp"

int main(int argc, char** argv) { return qsob::cli::run_cli(argc, argv, std::cout, std::cerr); }
