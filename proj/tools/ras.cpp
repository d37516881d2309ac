#include "ras/cli.hpp"

int main(int argc, char** argv) { return ras::cli::run(argc, argv); }
