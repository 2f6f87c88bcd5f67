#ifndef FAIRANK_TOOLS_CONFIG_FILE_HPP
#define FAIRANK_TOOLS_CONFIG_FILE_HPP

#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fairank::tool {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Flat `key = value` lines; `#` starts a comment. Quotes around values are dropped.
inline std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file " + path);
    }
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": expected `key = value`");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') && value.back() == value.front()) {
            value = value.substr(1, value.size() - 2);
        }
        if (key.empty()) {
            throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": empty key");
        }
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

/**
 * Expands `--config FILE` into `--key=value` arguments placed ahead of the
 * user's flags. Keys already given on the command line are skipped, so
 * flags override the file.
 */
inline std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::string path;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) {
                throw std::invalid_argument("--config needs a file name");
            }
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (path.empty()) {
        return args;
    }
    auto given = [&](const std::string& key) {
        const std::string flag = "--" + key;
        for (const auto& a : rest) {
            if (a == flag || a.rfind(flag + "=", 0) == 0) {
                return true;
            }
        }
        return false;
    };
    // rest[0] is the program name and rest[1] the subcommand.
    std::vector<std::string> out(rest.begin(), rest.begin() + std::min<std::size_t>(2, rest.size()));
    for (const auto& [key, value] : read_config_file(path)) {
        if (!given(key)) {
            out.push_back("--" + key + "=" + value);
        }
    }
    out.insert(out.end(), rest.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(2, rest.size())), rest.end());
    return out;
}

} // namespace fairank::tool

#endif // FAIRANK_TOOLS_CONFIG_FILE_HPP
