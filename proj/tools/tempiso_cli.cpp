#include <iostream>

#include "tempiso/cli.hpp"

int main(int argc, char** argv) { return tempiso::run_cli(argc, argv, std::cout, std::cerr); }
