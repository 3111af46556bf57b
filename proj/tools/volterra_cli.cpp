#include <iostream>
#include <string>
#include <vector>

#include "volterra/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return volterra::cli::run(args, std::cout, std::cerr);
}
