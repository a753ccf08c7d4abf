#include <iostream>

#include "tgr/cli.hpp"

int main(int argc, char** argv) { return tgr::run_cli(argc, argv, std::cout, std::cerr); }
