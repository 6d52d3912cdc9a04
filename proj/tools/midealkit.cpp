#include "midealkit/cli.hpp"

int main(int argc, char** argv) { return midealkit::run_cli(argc, argv); }
