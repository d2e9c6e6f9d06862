#include <iostream>

#include "mockcong/cli.hpp"

int main(int argc, char** argv) { return mockcong::run_cli(argc, argv, std::cout, std::cerr); }
