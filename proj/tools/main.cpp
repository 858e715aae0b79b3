#include <iostream>
#include <vector>

#include "pmds/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pmds::cli_run(args, std::cout, std::cerr);
}
