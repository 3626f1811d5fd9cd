#include <iostream>

#include "filtdom/cli.hpp"

int main(int argc, char** argv) { return filtdom::cli::run(argc, argv, std::cout, std::cerr); }
