#include <iostream>

#include "vaeq/cli.hpp"

int main(int argc, char** argv) {
    return vaeq::run_cli(argc, argv, std::cout, std::cerr);
}
