#include <iostream>

#include "qgw/cli_app.hpp"

int main(int argc, char** argv) {
    return qgw::cli::run(argc, argv, std::cout, std::cerr);
}
