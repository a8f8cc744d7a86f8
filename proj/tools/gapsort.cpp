#include "gapsort/cli.hpp"

int main(int argc, char** argv) { return gapsort::cli::run(argc, argv); }
