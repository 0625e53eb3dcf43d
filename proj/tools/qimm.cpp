#include <iostream>

#include "qimm/cli.hpp"

int main(int argc, char** argv) { return qimm::main_entry(argc, argv, std::cout, std::cerr); }
