#ifndef FAIRANK_TOOLS_MANIFEST_HPP
#define FAIRANK_TOOLS_MANIFEST_HPP

#include <openssl/evp.h>

#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fairank/errors.hpp"

namespace fairank::tool {

inline std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 failed");
    }
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) {
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return hex.str();
}

/**
 * Collects output files under one directory and writes manifest.json next
 * to them. Everything except the timing fields is a function of the
 * command line, so two identical runs differ only there.
 */
class OutputDir {
public:
    explicit OutputDir(std::filesystem::path dir) : dir_(std::move(dir)), start_(std::chrono::steady_clock::now()) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) {
            throw DataError("cannot create output directory " + dir_.string() + ": " + ec.message());
        }
    }

    void write(const std::string& name, const std::string& contents) {
        const auto path = dir_ / name;
        std::ofstream out(path, std::ios::binary);
        out << contents;
        out.close();
        if (!out) {
            throw DataError("cannot write " + path.string());
        }
        files_.push_back({{"path", name}, {"bytes", contents.size()}, {"sha256", sha256_hex(contents)}});
    }

    nlohmann::ordered_json& meta() { return meta_; }

    void finish(const std::string& command, const std::string& config_echo, const std::vector<std::uint64_t>& seeds) {
        nlohmann::ordered_json m;
        m["tool"] = "fairank";
        m["version"] = FAIRANK_VERSION;
        m["command"] = command;
        m["config"] = config_echo;
        m["seeds"] = seeds;
        for (auto& [k, v] : meta_.items()) {
            m[k] = v;
        }
        m["files"] = files_;
        const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        const std::time_t now = std::time(nullptr);
        char stamp[32];
        std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        m["finished_utc"] = stamp;
        m["wall_clock_seconds"] = elapsed;

        std::ofstream out(dir_ / "manifest.json");
        out << m.dump(2) << '\n';
        if (!out) {
            throw DataError("cannot write manifest in " + dir_.string());
        }
    }

private:
    std::filesystem::path dir_;
    std::chrono::steady_clock::time_point start_;
    nlohmann::ordered_json files_ = nlohmann::ordered_json::array();
    nlohmann::ordered_json meta_ = nlohmann::ordered_json::object();
};

} // namespace fairank::tool

#endif // FAIRANK_TOOLS_MANIFEST_HPP
