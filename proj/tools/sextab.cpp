#include "sextab/cli.hpp"

int main(int argc, char** argv) { return sextab::cli::run(argc, argv); }
