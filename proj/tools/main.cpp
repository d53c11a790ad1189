#include "rpla/cli.hpp"

int main(int argc, char** argv) { return rpla::run_cli(argc, argv); }
