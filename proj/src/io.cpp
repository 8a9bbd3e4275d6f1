#include "unicorn/io.hpp"
#include "unicorn/surface.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace unicorn {

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hexd = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hexd[md[i] >> 4]);
        out.push_back(hexd[md[i] & 15]);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DataError("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw DataError("cannot write " + path);
    f << content;
}

std::string RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["tool_version"] = tool_version;
    j["command"] = command;
    j["argv"] = argv;
    j["seed"] = seed;
    nlohmann::ordered_json jb = nlohmann::ordered_json::object();
    for (auto& [k, v] : budgets) jb[k] = v;
    j["budgets"] = jb;
    auto dump_pairs = [](const std::vector<std::pair<std::string, std::string>>& ps) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (auto& [p, h] : ps) arr.push_back({{"path", p}, {"sha256", h}});
        return arr;
    };
    j["inputs"] = dump_pairs(inputs);
    j["outputs"] = dump_pairs(outputs);
    return j.dump(2) + "\n";
}

} // namespace unicorn
