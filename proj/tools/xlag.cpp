#include "xlag/cli/app.hpp"

#include <cstdlib>
#include <iostream>
#include <unistd.h>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    xlag::cli::RunOptions opt;
    opt.color = isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
    return xlag::cli::run(args, std::cout, std::cerr, opt);
}
