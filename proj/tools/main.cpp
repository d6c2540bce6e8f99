#include <curvezeta/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return curvezeta::run_cli(argc, argv, std::cout, std::cerr); }
