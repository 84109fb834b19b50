#include <iostream>
#include <string>
#include <vector>

#include "root_enclose/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return root_enclose::run_cli(args, std::cout, std::cerr);
}
