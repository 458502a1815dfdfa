#include "sl2ybe/cli.hpp"

int main(int argc, char** argv) { return sl2ybe::run(argc, argv); }
