#include "stokes2p/log.hpp"

int main() {
    stokes2p::log()->info("CLI scaffolding; subcommands land with the solver modules");
    return 0;
}
