#include <iostream>

#include "icanon/cli.hpp"

int main(int argc, char** argv) { return icanon::cli::run(argc, argv, std::cout, std::cerr); }
