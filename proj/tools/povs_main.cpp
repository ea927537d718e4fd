#include <iostream>

#include "povs/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    povs::CommandResult r = povs::run_cli(args, std::cin);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
