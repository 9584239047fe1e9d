#include <iostream>

#include "tnn/cli/app.hpp"

int main(int argc, char** argv) { return tnn::cli::run(argc, argv, std::cout, std::cerr); }
