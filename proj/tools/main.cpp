#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return braidcx::tool::run(argc, argv, std::cout, std::cerr); }
