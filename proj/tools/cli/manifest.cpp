#include "manifest.hpp"

#include <openssl/evp.h>
#include <openssl/opensslv.h>

#include <array>
#include <chrono>
#include <ctime>
#include <fstream>
#include <memory>

#include <Eigen/Core>
#include <boost/version.hpp>

#include "command.hpp"
#include "holoca/fft.hpp"

#ifndef HOLOCA_VERSION
#define HOLOCA_VERSION "unknown"
#endif

namespace holoca::cli {

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
    std::array<char, 1 << 16> buf;
    while (in) {
        in.read(buf.data(), buf.size());
        EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest;
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), digest.data(), &len);
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

RunManifest::RunManifest(std::string command, std::vector<std::string> argv, std::uint64_t seed)
    : command_(std::move(command)), argv_(std::move(argv)), seed_(seed) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    timestamp_ = buf;
}

void RunManifest::add_check(const std::string& name, bool passed, const std::string& detail) {
    nlohmann::ordered_json c{{"name", name}, {"passed", passed}};
    if (!detail.empty()) c["detail"] = detail;
    checks_.push_back(std::move(c));
    failures_ += !passed;
}

void RunManifest::add_output(const std::filesystem::path& path) {
    outputs_.push_back({{"path", path.string()},
                        {"bytes", std::filesystem::file_size(path)},
                        {"sha256", sha256_file(path)}});
}

nlohmann::ordered_json RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command_;
    j["argv"] = argv_;
    j["timestamp"] = timestamp_;
    j["seed"] = seed_;
    j["versions"] = {
        {"holoca", HOLOCA_VERSION},
        {"compiler", __VERSION__},
        {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                      std::to_string(EIGEN_MINOR_VERSION)},
        {"boost", std::to_string(BOOST_VERSION / 100000) + "." + std::to_string(BOOST_VERSION / 100 % 1000) + "." +
                      std::to_string(BOOST_VERSION % 100)},
        {"fft", fft_backend_version()},
        {"openssl", OPENSSL_VERSION_TEXT},
    };
    j["config"] = config_;
    j["results"] = results_;
    j["checks"] = checks_;
    j["passed"] = failures_ == 0;
    j["outputs"] = outputs_;
    return j;
}

void RunManifest::write(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << to_json().dump(2) << '\n';
    if (!out) throw IoError("write failed for " + path.string());
}

} // namespace holoca::cli
