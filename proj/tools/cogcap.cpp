#include <iostream>

#include "cogcap/cli/cli.hpp"

int main(int argc, char** argv) { return cogcap::cli::run_cli(argc, argv, std::cout, std::cerr); }
