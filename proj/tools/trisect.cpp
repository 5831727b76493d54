#include "trisect/cli.hpp"

int main(int argc, char** argv) { return trisect::cli_main(argc, argv); }
