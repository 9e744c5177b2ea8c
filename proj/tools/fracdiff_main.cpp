#include "fracdiff/harness.hpp"

int main(int argc, char** argv) { return fracdiff::cli_main(argc, argv); }
