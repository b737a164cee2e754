#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace holoca::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailure = 1, kUsageError = 2, kIoError = 3 };

// Bad flags, bad values or a missing subcommand. `help` carries the usage
// text to print alongside the message.
class UsageError : public std::runtime_error {
public:
    UsageError(const std::string& what, std::string help) : std::runtime_error(what), help_(std::move(help)) {}
    const std::string& help() const noexcept { return help_; }

private:
    std::string help_;
};

// Raised for unreadable/unwritable paths.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Fully resolved invocation. Fields that a subcommand does not use keep
// their defaults.
struct Command {
    std::string name;
    std::vector<std::string> argv; // echo of the arguments after the program name

    std::uint64_t rule = 110;
    bool all_rules = false;
    std::size_t length = 64;
    std::size_t steps = 100;
    std::uint64_t seed = 0;
    std::string init = "center"; // evolve/armas-run initial state: center | random

    // verify-identity
    bool exhaustive = false;
    std::size_t samples = 1000;

    std::string mode;   // split: truncated | raw; armas-run: spatial | spectral
    std::string engine; // spectral-step: projector | polynomial | split; armas-run: rule | split
    int order = 5;      // langlet

    // reservoir-run
    std::string task = "temporal-parity";
    std::size_t width = 40;
    std::size_t iterations = 4;
    std::size_t redundancy = 8;
    std::size_t delay = 3;
    std::size_t sequence_length = 200;
    std::size_t trials = 25;
    double ridge = 1e-2;
    bool baseline = false;
    std::string injection = "overwrite";

    // armas-run
    std::size_t agents = 4;
    std::vector<std::string> injections; // "agent:cell[,cell...]"
    bool dump_frames = false;

    std::filesystem::path out_dir = ".";
    std::optional<std::filesystem::path> out;      // primary artifact
    std::optional<std::filesystem::path> csv;      // classify table
    std::optional<std::filesystem::path> manifest; // defaults to <out_dir>/<name>.manifest.json
};

// Parses argv (including the program name). Reads HOLOCA_SEED and
// HOLOCA_OUT_DIR as defaults for --seed and --out-dir. Throws UsageError.
// Returns nullopt when help was requested and printed.
std::optional<Command> parse_args(int argc, const char* const* argv);

// Runs the command, writes its artifacts and manifest, and returns the exit
// code. Messages go to stdout; failures to stderr.
int execute(const Command& command);

} // namespace holoca::cli
