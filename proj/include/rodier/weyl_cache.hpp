#ifndef RODIER_WEYL_CACHE_HPP
#define RODIER_WEYL_CACHE_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rodier/cartan.hpp"

namespace rodier {

// On-disk cache of enumerated Weyl groups, one file per type. Each file carries a format
// version and a CRC-32 of its payload; anything that fails validation is treated as a miss.

inline constexpr int kCacheVersion = 1;

/// $RODIER_CACHE_DIR if set, otherwise ./.rodier-cache.
std::filesystem::path default_cache_dir();
/// $RODIER_CACHE_DIR if set; decompose and verify only touch the disk when this is present.
std::optional<std::filesystem::path> env_cache_dir();

std::filesystem::path cache_file(const std::filesystem::path& dir, const CartanType& type);

void store_weyl(const std::filesystem::path& dir, const WeylGroup& group);
/// nullopt on a missing, truncated, mismatched or corrupted file.
std::optional<WeylGroup> load_weyl(const std::filesystem::path& dir, const RootSystemPtr& rs);

/// Load from `dir` when possible, otherwise enumerate (and store when `dir` is given).
WeylGroup cached_weyl(const RootSystemPtr& rs, const std::optional<std::filesystem::path>& dir,
                      std::size_t cap = kDefaultEnumerationCap);

struct CacheEntry {
  std::string type;
  std::size_t elements = 0;
  std::uint32_t checksum = 0;
  std::uintmax_t bytes = 0;
  bool valid = false;
};

std::vector<CacheEntry> cache_stat(const std::filesystem::path& dir);
/// Removes cache files; returns how many were removed. A missing directory is a no-op.
std::size_t cache_clear(const std::filesystem::path& dir);

}  // namespace rodier

#endif  // RODIER_WEYL_CACHE_HPP
