#include "specht/cli.hpp"

int main(int argc, char** argv) { return specht::cli::run(argc, argv); }
