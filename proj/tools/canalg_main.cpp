#include <iostream>

#include "canalg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return canalg::cli::run(args, std::cout, std::cerr);
}
