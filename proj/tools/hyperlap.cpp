#include "hyperlap/frontend.hpp"

int main(int argc, char** argv) { return hyperlap::run_cli(argc, argv); }
