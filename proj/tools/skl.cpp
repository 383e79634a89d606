#include "skl/cli.hpp"

int main(int argc, char** argv) { return skl::run(argc, argv); }
