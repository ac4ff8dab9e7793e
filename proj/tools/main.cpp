#include "dihedral/cli.hpp"

int main(int argc, char** argv) {
    return dihedral::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
