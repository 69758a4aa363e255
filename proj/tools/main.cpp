#include "lgcoh/cli.hpp"

int main(int argc, char** argv) { return lgcoh::cli::run_main(argc, argv); }
