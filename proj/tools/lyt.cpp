#include <iostream>

#include "lyt/cli.hpp"

int main(int argc, char **argv)
{
    return lyt::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
