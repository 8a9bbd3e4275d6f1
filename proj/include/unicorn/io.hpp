#pragma once

#include <string>
#include <vector>

namespace unicorn {

std::string sha256_hex(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Run manifest written next to every CLI artifact. Replaying the recorded
// command with equal input hashes must reproduce equal output hashes.
struct RunManifest {
    std::string tool_version;
    std::string command;
    std::vector<std::string> argv;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> budgets; // name -> value
    std::vector<std::pair<std::string, std::string>> inputs;  // path -> sha256
    std::vector<std::pair<std::string, std::string>> outputs; // path -> sha256
    std::string to_json() const;
};

} // namespace unicorn
