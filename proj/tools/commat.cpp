#include <iostream>
#include <string>
#include <vector>

#include "commat/cli.hpp"

int main(int argc, char** argv) {
    return commat::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
