#ifndef RGC_CACHE_HPP
#define RGC_CACHE_HPP

#include <optional>
#include <string>

#include "rgc/enumeration.hpp"

namespace rgc {

/// Cache directory from RGC_CACHE_DIR; nullopt disables caching.
std::optional<std::string> cache_dir();

/// Content-hash cache key for (format version, d, selector).
std::string cache_key(const Selector& sel);

/// enumerate_basis with a read-through file cache under RGC_CACHE_DIR.
/// Entries are keyed by a content hash of (format version, d, selector);
/// unreadable or mismatched entries are recomputed and rewritten.
SectorBasis cached_basis(const Selector& sel);

} // namespace rgc

#endif
