#include <iostream>

#include "sidedisk/cli.hpp"

int main(int argc, char** argv) { return sidedisk::run_cli(argc, argv, std::cout, std::cerr); }
