#include "cli.hpp"

int main(int argc, char** argv) { return regmix::cli::run(argc, argv); }
