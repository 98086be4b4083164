#include <iostream>

#include "conelink/cli.hpp"

int main(int argc, char** argv) { return conelink::run_cli(argc, argv, std::cout, std::cerr); }
