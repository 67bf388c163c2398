#include <iostream>

#include "idealtop/cli.hh"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return idealtop::run_cli(args, std::cout, std::cerr);
}
