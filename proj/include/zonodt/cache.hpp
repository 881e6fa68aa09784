#ifndef ZONODT_CACHE_HPP
#define ZONODT_CACHE_HPP

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace zonodt {

std::uint64_t fnv1a64(const std::string& data);
std::string hash_hex(const std::string& data);

// Content-addressed store of result envelopes, one JSON file per input hash.
// Entries written by a different library version are ignored. Any IO or parse
// problem downgrades to a cache miss with a warning on stderr; the cache never
// makes a run fail.
class ResultCache {
public:
    ResultCache(std::string dir, std::string version, bool enabled);

    std::optional<nlohmann::json> get(const std::string& key_hex);
    void put(const std::string& key_hex, const nlohmann::json& envelope);

    bool enabled() const { return enabled_; }

private:
    std::string path_for(const std::string& key_hex) const;
    std::string dir_;
    std::string version_;
    bool enabled_;
};

} // namespace zonodt

#endif
