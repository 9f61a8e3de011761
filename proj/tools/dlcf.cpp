#include "dlcf/cli/run.hpp"

int main(int argc, char** argv) { return dlcf::cli::main_entry(argc, argv); }
