#include <iostream>

#include "debox/cli.hpp"

int main(int argc, char** argv) {
    return debox::cli_main(argc, argv, std::cout, std::cerr);
}
