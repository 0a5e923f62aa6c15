#include <iostream>

#include "planevar/cli.hpp"

int main(int argc, char** argv) {
    return planevar::run_command(argc, argv, std::cout, std::cerr);
}
