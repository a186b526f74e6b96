#pragma once

#include "sumfree/search.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sumfree {

inline constexpr int kCacheFormatVersion = 1;

/// Identifies the search engine and witness rule. Caches written under a
/// different fingerprint are discarded on load.
std::string engine_fingerprint();

/// Maximum-cardinality sets for one n, as sorted canonical strings.
struct MaximumDigest {
    unsigned n = 0;
    unsigned count = 0;
    std::vector<std::string> sets;

    friend bool operator==(const MaximumDigest&, const MaximumDigest&) = default;
};

MaximumDigest make_digest(unsigned n, const std::vector<SetRecord>& maximum_sets);

struct CacheFile {
    int format_version = kCacheFormatVersion;
    std::string engine_fingerprint;
    std::map<std::pair<unsigned, unsigned>, GEntry> g_entries;
    std::map<unsigned, MaximumDigest> maximum_digests;
};

enum class CacheStatus { Missing, Loaded, Discarded };

struct CacheLoad {
    CacheFile cache;
    CacheStatus status = CacheStatus::Missing;
    std::string reason; // why a file was discarded
};

/// Line-oriented JSON: a header record with format_version and
/// engine_fingerprint, then one record per g entry or digest. Anything
/// unreadable, a version or fingerprint mismatch, or a duplicate (n, m)
/// discards the whole file.
CacheLoad load_cache(const std::filesystem::path& path, const std::string& fingerprint);

std::string serialize_cache(const CacheFile& cache);

/// Writes a sibling temp file, syncs it, then renames it over path.
/// before_rename runs between the two steps; if it throws, the temp file is
/// left behind and path is untouched.
void save_cache_atomic(const std::filesystem::path& path, const CacheFile& cache,
                       const std::function<void()>& before_rename = {});

class CacheBusyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exclusive advisory lock on `<path>.lock`, held for the object's lifetime.
/// Throws CacheBusyError immediately if another holder exists.
class CacheLock {
public:
    explicit CacheLock(const std::filesystem::path& cache_path);
    ~CacheLock();
    CacheLock(const CacheLock&) = delete;
    CacheLock& operator=(const CacheLock&) = delete;

private:
    int fd_ = -1;
};

}  // namespace sumfree
