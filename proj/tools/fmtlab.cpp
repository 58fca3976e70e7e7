#include <fmtlab/cli.hpp>

#include <iostream>

auto main(int argc, char ** argv) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return fmtlab::dispatch(args, std::cout, std::cerr);
}
