#include <iostream>

#include "dbatk/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dbatk::run_cli(args, std::cout, std::cerr);
}
