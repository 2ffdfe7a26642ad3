#include "incompat/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return incompat::cli::run(argc, argv, std::cout, std::cerr);
}
