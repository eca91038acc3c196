#include <iostream>

#include "drazinkit/cli.hpp"

int main(int argc, char** argv) {
    return drazinkit::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
