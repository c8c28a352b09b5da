#include <iostream>
#include <string>
#include <vector>

#include "virtua/session.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return virtua::run_cli(args, std::cout, std::cerr);
}
