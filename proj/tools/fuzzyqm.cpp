#include <iostream>

#include "fuzzyqm/cli/app.hpp"

int main(int argc, char** argv) { return fuzzyqm::cli::run_main(argc, argv, std::cout, std::cerr); }
