#include "cli.hpp"

int main(int argc, char** argv) { return u6ncay::cli::cli_main(argc, argv); }
