#include <iostream>

#include "hopfgk/cli.hpp"

int main(int argc, char** argv) {
    return hopfgk::runCLI({argv + 1, argv + argc}, std::cout, std::cerr);
}
