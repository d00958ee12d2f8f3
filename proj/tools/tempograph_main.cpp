#include "tempograph/cli.hpp"

int main(int argc, char **argv) { return tempograph::cli::run(argc, argv); }
