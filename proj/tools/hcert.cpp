#include "hcert/cli/run.hpp"

#include <iostream>

int main(int argc, char** argv) { return hcert::cli::run_main(argc, argv, std::cout, std::cerr); }
