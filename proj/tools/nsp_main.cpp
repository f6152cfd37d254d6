#include <iostream>
#include <string>
#include <vector>

#include "nsp/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    return nsp::cli::run(args, std::cout, std::cerr);
}
