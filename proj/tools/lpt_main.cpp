#include <iostream>
#include <string>
#include <vector>

#include "lpt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lpt::cli::run(std::move(args), std::cout, std::cerr);
}
