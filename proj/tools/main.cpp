#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lexirev::run_cli(argc, argv, std::cout, std::cerr); }
