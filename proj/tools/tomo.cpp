#include "tomo/cli.hpp"

int main(int argc, char** argv) { return tomo::cli::main_entry(argc, argv); }
