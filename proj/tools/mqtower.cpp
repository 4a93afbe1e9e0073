#include <iostream>

#include "mqt/cli.hpp"

int main(int argc, char** argv) { return mqt::run_cli(argc, argv, std::cout, std::cerr); }
