// Command-line entry point; all logic lives in padicroots/cli.hpp.

#include "padicroots/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return padicroots::run_cli(argc, argv, std::cout, std::cerr); }
