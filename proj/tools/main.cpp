#include <provlog/cli.hpp>

int main(int argc, char** argv) { return provlog::cli::run(argc, argv); }
