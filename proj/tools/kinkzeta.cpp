#include <iostream>

#include "kinkzeta/cli.hpp"

int main(int argc, char** argv) { return kinkzeta::cli::run(argc, argv, std::cout, std::cerr); }
