#include "threegap/cli.hpp"

int main(int argc, char** argv) { return threegap::run_cli(argc, argv); }
