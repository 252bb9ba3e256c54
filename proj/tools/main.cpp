#include <iostream>

#include "app.hpp"

int main(int argc, char** argv) { return movmed::cli::run(argc, argv, std::cout, std::cerr); }
