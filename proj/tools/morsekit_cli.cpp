#include "cli_commands.hpp"

int main(int argc, char** argv) { return morsekit::cli::run(argc, argv); }
