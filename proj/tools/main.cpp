#include "ptrg/cli.hpp"

int main(int argc, char** argv) { return ptrg::run_cli(argc, argv); }
