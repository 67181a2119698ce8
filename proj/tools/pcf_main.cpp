#include <iostream>

#include "pcf/cli.hpp"

int main(int argc, char** argv) {
    return pcf::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
