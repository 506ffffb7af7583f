#include <iostream>

#include "lieconc/cli.hpp"

int main(int argc, char** argv) { return lieconc::run(argc, argv, std::cout, std::cerr); }
