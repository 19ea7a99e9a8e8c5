#include <iostream>

#include "mea/cli.hpp"

int main(int argc, char** argv) { return mea::cli::run_cli(argc, argv, std::cout, std::cerr); }
