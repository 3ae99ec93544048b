#include <iostream>

#include "ccfrac_cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    const ccfrac::cli::Outcome r = ccfrac::cli::run(args);
    (r.code == ccfrac::cli::kOk ? std::cout : std::cerr) << r.out;
    return r.code;
}
