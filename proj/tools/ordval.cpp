#include "ordval/cli.hpp"

#include <cstdio>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    ordval::CommandResult r = ordval::runCommand(args);
    std::fputs(r.output.c_str(), stdout);
    return r.exitCode;
}
