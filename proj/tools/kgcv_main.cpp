#include <iostream>
#include <string>
#include <vector>

#include "kgcv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return kgcv::cli::run(args, std::cout, std::cerr);
}
