#include <iostream>

#include "qcfd/cli.hpp"

int main(int argc, char** argv) { return qcfd::run_cli(argc, argv, std::cout, std::cerr); }
