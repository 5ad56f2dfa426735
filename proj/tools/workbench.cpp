#include <iostream>

#include "workbench/cli.hpp"

int main(int argc, char** argv) { return workbench::run_cli(argc, argv, std::cout, std::cerr); }
