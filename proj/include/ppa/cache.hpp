#pragma once
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "ppa/algebra.hpp"

namespace ppa {

// bump when the serialized layout or the basis construction changes
inline constexpr int kCacheVersion = 1;

struct CacheIO {
    static nlohmann::json to_json(const Algebra& A);
    static Algebra from_json(const nlohmann::json& j); // throws on any mismatch
};

std::string cache_path(const std::string& dir, const DynkinQuiver& q);
// best effort; returns false when the file could not be written
bool save_algebra_cache(const Algebra& A, const std::string& dir);
std::optional<Algebra> load_algebra_cache(const DynkinQuiver& q, const std::string& dir);
// cached build: loads when possible, otherwise constructs and saves.
// An empty dir or no_cache disables the cache entirely.
Algebra load_algebra(const DynkinQuiver& q, const std::string& dir, bool no_cache);

} // namespace ppa
