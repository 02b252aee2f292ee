#include "kmsatake/cli.hpp"

int main(int argc, char** argv) { return kmsatake::run_cli(argc, argv); }
