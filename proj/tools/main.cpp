#include <iostream>

#include "fanostrat/cli.hpp"

int main(int argc, char** argv) { return fanostrat::run_cli(argc, argv, std::cout, std::cerr); }
