#include <iostream>

#include "hochhom/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return hochhom::run(args, std::cout, std::cerr);
}
