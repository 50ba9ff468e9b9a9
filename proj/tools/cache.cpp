#include "cache.hpp"

#include "mtv/euler.hpp"
#include "mtv/symfun.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace mtv::cli {

std::string serialize(const CacheFile& cache) {
    nlohmann::ordered_json j;
    j["version"] = cache.version;
    auto& e = j["euler"] = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < cache.euler.size(); ++i) e[std::to_string(2 * i)] = cache.euler[i].get_str();
    auto& p = j["power_sums"] = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < cache.power_sums.size(); ++i)
        p[std::to_string(i + 1)] = {{"rational", cache.power_sums[i].coef().to_string()},
                                    {"pi_power", cache.power_sums[i].weight()}};
    return j.dump(1) + "\n";
}

std::optional<CacheFile> parse_cache(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        CacheFile c;
        c.version = j.at("version").get<int>();
        if (c.version != kCacheVersion) return std::nullopt;
        const auto& e = j.at("euler");
        for (std::size_t i = 0; i < e.size(); ++i) c.euler.emplace_back(e.at(std::to_string(2 * i)).get<std::string>());
        const auto& p = j.at("power_sums");
        for (std::size_t i = 1; i <= p.size(); ++i) {
            const auto& entry = p.at(std::to_string(i));
            c.power_sums.emplace_back(Rational::parse(entry.at("rational").get<std::string>()),
                                      entry.at("pi_power").get<unsigned>());
        }
        if (!c.euler.empty() && euler_numbers(c.euler.size() - 1).values() != c.euler) return std::nullopt;
        if (!c.power_sums.empty() && oracle::power_sums(c.power_sums.size()).entries() != c.power_sums)
            return std::nullopt;
        return c;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::filesystem::path default_cache_path() {
    if (const char* env = std::getenv("MTV_CACHE_PATH"); env != nullptr && *env != '\0') return env;
    return std::filesystem::path(".") / ".mtv-cache.json";
}

CacheFile load_cache(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return {};
    std::stringstream ss;
    ss << in.rdbuf();
    auto parsed = parse_cache(ss.str());
    if (!parsed) return {};
    seed_euler_table(parsed->euler);
    oracle::seed_power_sums(parsed->power_sums);
    return *parsed;
}

CacheFile snapshot_cache() {
    CacheFile c;
    c.euler = euler_snapshot().values();
    c.power_sums = oracle::power_sum_snapshot();
    return c;
}

void save_cache_atomic(const std::filesystem::path& path, const CacheFile& cache) {
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;
        out << serialize(cache);
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            return;
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace mtv::cli
