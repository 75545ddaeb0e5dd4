#include <iostream>
#include <string>
#include <vector>

#include "polycert/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return polycert::cli::main(args, std::cin, std::cout, std::cerr);
}
