#include "invchain/io/cache.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "invchain/error.hpp"
#include "invchain/io/serialize.hpp"

namespace invchain {

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::path_for(std::string_view kind, const std::string& key) const {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
    return dir_ / (std::string(kind) + "-" + hex + ".json");
}

std::optional<std::string> ResultCache::load(std::string_view kind, const std::string& key) const {
    std::ifstream in(path_for(kind, key));
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        auto j = nlohmann::json::parse(ss.str());
        if (j.at("key").get<std::string>() != key) return std::nullopt;
        return j.at("document").get<std::string>();
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

void ResultCache::store(std::string_view kind, const std::string& key, const std::string& document) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw InputError("cannot create cache directory " + dir_.string() + ": " + ec.message());
    auto target = path_for(kind, key);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw InputError("cannot write " + tmp.string());
        out << nlohmann::json{{"key", key}, {"document", document}}.dump();
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) throw InputError("cannot write " + target.string() + ": " + ec.message());
}

std::string toric_cache_key(const IntMatrix& A, const TermOrder& order) {
    return "toric|" + order.name() + "|" + engine_version() + "|" + to_json(A);
}

GroebnerBasis cached_toric_ideal(const IntMatrix& A, const TermOrder& order, const ToricOptions& opts,
                                 const ResultCache* cache, bool* hit) {
    if (hit) *hit = false;
    const auto key = toric_cache_key(A, order);
    if (cache) {
        if (auto doc = cache->load("toric", key)) {
            if (hit) *hit = true;
            return parse_gb_json(*doc);
        }
    }
    auto gb = toric_ideal_from_matrix(A, order, opts);
    if (cache) cache->store("toric", key, to_json(gb));
    return gb;
}

}  // namespace invchain
