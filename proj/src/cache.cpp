#include "zonodt/cache.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace zonodt {

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_hex(const std::string& data) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(data);
    return out.str();
}

ResultCache::ResultCache(std::string dir, std::string version, bool enabled)
    : dir_(std::move(dir)), version_(std::move(version)), enabled_(enabled) {
    if (!enabled_ || dir_.empty()) {
        enabled_ = false;
        return;
    }
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) {
        std::cerr << "warning: cannot create cache directory " << dir_ << ": "
                  << ec.message() << "; caching disabled\n";
        enabled_ = false;
    }
}

std::string ResultCache::path_for(const std::string& key_hex) const {
    return dir_ + "/" + key_hex + ".json";
}

std::optional<nlohmann::json> ResultCache::get(const std::string& key_hex) {
    if (!enabled_) return std::nullopt;
    std::ifstream in(path_for(key_hex));
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json envelope = nlohmann::json::parse(buf.str(), nullptr, false);
    if (envelope.is_discarded()) {
        std::cerr << "warning: corrupt cache entry " << path_for(key_hex)
                  << "; recomputing\n";
        return std::nullopt;
    }
    if (!envelope.contains("version") || envelope["version"] != version_)
        return std::nullopt;
    return envelope;
}

void ResultCache::put(const std::string& key_hex, const nlohmann::json& envelope) {
    if (!enabled_) return;
    std::ofstream out(path_for(key_hex));
    if (!out) {
        std::cerr << "warning: cannot write cache entry " << path_for(key_hex)
                  << "; caching disabled\n";
        enabled_ = false;
        return;
    }
    out << envelope.dump();
}

} // namespace zonodt
