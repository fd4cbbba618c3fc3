// Command-line driver. Subcommands are filled in as the library lands;
// this translation unit is kept building throughout.

#include <cstdio>

int main() {
    std::puts("eqlambda: no subcommand given (CLI under construction)");
    return 2;
}
