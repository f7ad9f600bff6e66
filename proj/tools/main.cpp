#include "kirchhoff/cli.hpp"

int main(int argc, char** argv) { return kirchhoff::cli::dispatch(argc, argv); }
