#include <iostream>

#include "mtrs/cli.hpp"

int main(int argc, char** argv) { return mtrs::run_cli(argc, argv, std::cout, std::cerr); }
