#include <iostream>

#include "fujimoto/cli.hpp"

int main(int argc, char** argv) { return fujimoto::run_cli(argc, argv, std::cout, std::cerr); }
