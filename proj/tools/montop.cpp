#include "montop/cli.hpp"

int main(int argc, char** argv) { return montop::cli::main_entry(argc, argv); }
