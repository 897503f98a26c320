#include "plumbcalc/cli.hpp"

int main(int argc, char** argv) { return plumbcalc::cli::run(argc, argv); }
