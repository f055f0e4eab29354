#include <iostream>
#include <string>
#include <vector>

#include "cascade_noise/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cascade_noise::run_cli(args, std::cout, std::cerr);
}
