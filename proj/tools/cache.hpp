#pragma once

#include "mtv/pi_value.hpp"
#include "mtv/rational.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mtv::cli {

inline constexpr int kCacheVersion = 1;

/// Persisted Euler numbers and power sums. Purely an optimization: every entry
/// is checked against recomputation on load.
struct CacheFile {
    int version = kCacheVersion;
    std::vector<BigInt> euler;         ///< E_0, E_2, ...
    std::vector<PiValue> power_sums;   ///< p_1, p_2, ...

    friend bool operator==(const CacheFile&, const CacheFile&) = default;
};

/// Deterministic JSON text; identical contents give identical bytes.
std::string serialize(const CacheFile& cache);

/// Parses and validates. Returns nullopt for malformed text, a different
/// version, or any entry that disagrees with recomputation.
std::optional<CacheFile> parse_cache(const std::string& text);

/// MTV_CACHE_PATH, or ./.mtv-cache.json.
std::filesystem::path default_cache_path();

/// Reads `path` and seeds the in-process memos. Returns the accepted contents
/// (empty when absent or rejected).
CacheFile load_cache(const std::filesystem::path& path);

/// Current memo contents.
CacheFile snapshot_cache();

/// Writes via a temporary file in the same directory, then renames.
void save_cache_atomic(const std::filesystem::path& path, const CacheFile& cache);

}  // namespace mtv::cli
