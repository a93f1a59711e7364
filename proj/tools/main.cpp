#include "coalcomp/cli.hpp"

int main(int argc, char** argv) { return coalcomp::run_cli(argc, argv); }
