#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace holoca::cli {

// Hex SHA-256 of a file's contents.
std::string sha256_file(const std::filesystem::path& path);

// Records what a run did: its configuration, checks and artifacts.
class RunManifest {
public:
    RunManifest(std::string command, std::vector<std::string> argv, std::uint64_t seed);

    nlohmann::ordered_json& config() { return config_; }
    nlohmann::ordered_json& results() { return results_; }

    void add_check(const std::string& name, bool passed, const std::string& detail = {});
    // Hashes the file as it is now; call after it is fully written.
    void add_output(const std::filesystem::path& path);
    bool all_passed() const noexcept { return failures_ == 0; }

    nlohmann::ordered_json to_json() const;
    void write(const std::filesystem::path& path) const;

private:
    std::string command_;
    std::vector<std::string> argv_;
    std::uint64_t seed_;
    std::string timestamp_;
    nlohmann::ordered_json config_ = nlohmann::ordered_json::object();
    nlohmann::ordered_json results_ = nlohmann::ordered_json::object();
    nlohmann::ordered_json checks_ = nlohmann::ordered_json::array();
    nlohmann::ordered_json outputs_ = nlohmann::ordered_json::array();
    int failures_ = 0;
};

} // namespace holoca::cli
