#include <iostream>
#include <string>
#include <vector>

#include "rulerfold/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return rulerfold::cli::run(args, std::cout, std::cerr);
}
