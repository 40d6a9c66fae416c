#include <iostream>
#include <string>
#include <vector>

#include "vulnkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return vulnkit::cli::run(args, std::cout, std::cerr);
}
