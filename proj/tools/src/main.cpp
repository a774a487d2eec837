#include <iostream>
#include <string>
#include <vector>

#include "gdrs_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gdrs::cli::run(args, std::cout, std::cerr);
}
