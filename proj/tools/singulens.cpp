#include <iostream>

#include "singulens/cli.hpp"

int main(int argc, char** argv) { return singulens::run_cli(argc, argv, std::cout, std::cerr); }
