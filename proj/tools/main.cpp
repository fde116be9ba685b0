#include "cli.hpp"

int main(int argc, char** argv) { return cliffconn::cli::run(argc, argv); }
