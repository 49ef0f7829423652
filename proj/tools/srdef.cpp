#include <iostream>

#include "srdef/cli.hpp"

int main(int argc, char** argv) {
    return srdef::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
