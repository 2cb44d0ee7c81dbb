#include "jetrep/reports/cli.hpp"

int main(int argc, char** argv) { return jetrep::cli_dispatch(argc, argv); }
