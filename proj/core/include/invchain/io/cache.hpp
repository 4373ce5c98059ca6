#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "invchain/algebra/term_order.hpp"
#include "invchain/groebner/ideal.hpp"
#include "invchain/groebner/toric.hpp"
#include "invchain/lattice/int_matrix.hpp"

namespace invchain {

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view data);

/// Documents stored as <dir>/<kind>-<16 hex digits of the key hash>.json.
/// The full key is stored inside the document and compared on load, so a
/// hash collision reads as a miss.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    std::optional<std::string> load(std::string_view kind, const std::string& key) const;
    /// Writes through a temporary file and a rename.
    void store(std::string_view kind, const std::string& key, const std::string& document) const;

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(std::string_view kind, const std::string& key) const;

private:
    std::filesystem::path dir_;
};

/// Cache key of a toric basis: matrix entries, labels, order, engine version.
std::string toric_cache_key(const IntMatrix& A, const TermOrder& order);

/// toric_ideal_from_matrix with a lookup in the cache first.
GroebnerBasis cached_toric_ideal(const IntMatrix& A, const TermOrder& order, const ToricOptions& opts,
                                 const ResultCache* cache, bool* hit = nullptr);

}  // namespace invchain
