#include <iostream>
#include <string>
#include <vector>

#include "g1chow/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return g1chow::cli::run(args, std::cout, std::cerr);
}
