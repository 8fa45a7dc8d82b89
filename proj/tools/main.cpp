#include <iostream>

#include "walktransfer/cli.hpp"

int main(int argc, char** argv) { return wt::run_cli(argc, argv, std::cout, std::cerr); }
