#include "cli.hpp"

int main(int argc, char** argv) { return cboom::cli::run(argc, argv, std::cout, std::cerr); }
