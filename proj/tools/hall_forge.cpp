#include "runner.hpp"

int main(int argc, char** argv) { return hallforge::cli::cli_main(argc, argv); }
