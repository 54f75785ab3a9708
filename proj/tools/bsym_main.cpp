#include <iostream>

#include "bsym/cli.hpp"

int main(int argc, char** argv) { return bsym::cli_main(argc, argv, std::cout, std::cerr); }
