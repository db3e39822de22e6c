#include <iostream>

#include "ellwin/cli.hpp"

int main(int argc, char **argv) { return ellwin::cli::run(argc, argv, std::cout, std::cerr); }
