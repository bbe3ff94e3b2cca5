#include "laqc/cli.hpp"

int main(int argc, char** argv) {
    return laqc::cli::run(argc, argv);
}
