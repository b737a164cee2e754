#include <iostream>

#include "command.hpp"

int main(int argc, char** argv) {
    using namespace holoca::cli;
    try {
        const auto command = parse_args(argc, argv);
        if (!command) return kSuccess;
        return execute(*command);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << e.help();
        return kUsageError;
    }
}
