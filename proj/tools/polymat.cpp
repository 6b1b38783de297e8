#include <polymat/cli.hpp>

int main(int argc, char** argv) { return polymat::cli::run(argc, argv, std::cout, std::cerr); }
