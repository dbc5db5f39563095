#include "commons/cli.hpp"

int main(int argc, char** argv) { return commons::run_cli(argc, argv); }
