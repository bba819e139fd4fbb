#include "penrose/cli.hpp"

int main(int argc, char** argv) {
    return penrose::cli::runCommand(argc, argv);
}
