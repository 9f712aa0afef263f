#include <iostream>

#include "ringtsp/cli.hpp"

int main(int argc, char** argv) { return ringtsp::cli::run(argc, argv, std::cout, std::cerr); }
