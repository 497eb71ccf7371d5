#include "gammacalc/cli.hpp"

int main(int argc, char** argv) {
    return gammacalc::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
