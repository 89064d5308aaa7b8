#include "onecenter/cli.hpp"

int main(int argc, char** argv) { return onecenter::run_cli(argc, argv); }
