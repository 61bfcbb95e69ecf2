#include <iostream>
#include <string>
#include <vector>

#include "bcplus/driver.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bcplus::run(args, std::cout, std::cerr);
}
