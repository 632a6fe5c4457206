#include "mhelm/cli.hpp"

int main(int argc, char** argv) { return mhelm::run_cli(argc, argv); }
