#include "tourlab/cli.hpp"

int main(int argc, char** argv) { return tourlab::cli_main(argc, argv); }
