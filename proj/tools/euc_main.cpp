#include <iostream>

#include "euc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return euc::run_cli(args, std::cout, std::cerr);
}
