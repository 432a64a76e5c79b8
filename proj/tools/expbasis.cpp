#include "expbasis/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return expbasis::cli::run(args, std::cout, std::cerr);
}
