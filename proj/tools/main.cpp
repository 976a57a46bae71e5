#include "abelrep/cli.hpp"

int main(int argc, char** argv) { return abelrep::run_main(argc, argv); }
