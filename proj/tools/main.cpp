#include <iostream>

#include "connspace/cli.hpp"

int main(int argc, char** argv) {
    return connspace::run_cli(argc, argv, std::cout, std::cerr);
}
