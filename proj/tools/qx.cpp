#include <iostream>

#include "qx/cli/cli.hpp"

int main(int argc, char** argv)
{
    return qx::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
