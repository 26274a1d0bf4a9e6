#include <iostream>

#include "hg/cli.hpp"

int main(int argc, char** argv) { return hg::run(argc, argv, std::cout, std::cerr); }
