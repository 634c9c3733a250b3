#include <iostream>

#include "ckq_cli.hpp"

int main(int argc, char** argv) { return ckq::cli::main_entry(argc, argv, std::cout, std::cerr); }
