#include <iostream>

#include "sympq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sympq::run_cli(args, std::cout, std::cerr);
}
