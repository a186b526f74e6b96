#include "sumfree/cache.hpp"

#include "sumfree/report.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

namespace sumfree {

namespace {

CacheLoad discarded(std::string reason, const std::string& fingerprint)
{
    CacheLoad out;
    out.cache.engine_fingerprint = fingerprint;
    out.status = CacheStatus::Discarded;
    out.reason = std::move(reason);
    return out;
}

std::string errno_text() { return std::strerror(errno); }

}  // namespace

std::string engine_fingerprint()
{
    return "sumfree-engine/1;word-bitset-dfs;bnb-ties-min-bit-pattern";
}

MaximumDigest make_digest(unsigned n, const std::vector<SetRecord>& maximum_sets)
{
    MaximumDigest d{n, static_cast<unsigned>(maximum_sets.size()), {}};
    for (const SetRecord& r : maximum_sets)
        d.sets.push_back(r.set.to_string());
    std::sort(d.sets.begin(), d.sets.end());
    return d;
}

CacheLoad load_cache(const std::filesystem::path& path, const std::string& fingerprint)
{
    std::ifstream in(path);
    if (!in) {
        CacheLoad out;
        out.cache.engine_fingerprint = fingerprint;
        return out;
    }

    CacheLoad out;
    out.cache.engine_fingerprint = fingerprint;
    out.status = CacheStatus::Loaded;
    std::string line;
    std::size_t line_no = 0;
    try {
        if (!std::getline(in, line))
            return discarded("empty file", fingerprint);
        ++line_no;
        const Json header = Json::parse(line);
        if (header.at("format_version").get<int>() != kCacheFormatVersion)
            return discarded("format version " + header.at("format_version").dump(), fingerprint);
        if (header.at("engine_fingerprint").get<std::string>() != fingerprint)
            return discarded("engine fingerprint mismatch", fingerprint);

        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty())
                continue;
            const Json rec = Json::parse(line);
            const std::string kind = rec.at("kind").get<std::string>();
            if (kind == "g") {
                GEntry g = g_entry_from_json(rec);
                const auto key = std::make_pair(g.n, g.m);
                if (!out.cache.g_entries.emplace(key, std::move(g)).second)
                    return discarded("duplicate g entry on line " + std::to_string(line_no), fingerprint);
            } else if (kind == "maximum") {
                MaximumDigest d{rec.at("n").get<unsigned>(), rec.at("count").get<unsigned>(),
                                rec.at("sets").get<std::vector<std::string>>()};
                if (d.count != d.sets.size())
                    return discarded("digest count mismatch on line " + std::to_string(line_no), fingerprint);
                const unsigned n = d.n;
                if (!out.cache.maximum_digests.emplace(n, std::move(d)).second)
                    return discarded("duplicate digest on line " + std::to_string(line_no), fingerprint);
            } else {
                return discarded("unknown record kind '" + kind + "'", fingerprint);
            }
        }
    } catch (const std::exception& e) {
        return discarded("line " + std::to_string(line_no) + ": " + e.what(), fingerprint);
    }
    return out;
}

std::string serialize_cache(const CacheFile& cache)
{
    std::ostringstream os;
    os << Json{{"format_version", cache.format_version}, {"engine_fingerprint", cache.engine_fingerprint}}.dump()
       << '\n';
    for (const auto& [key, g] : cache.g_entries) {
        Json rec{{"kind", "g"}};
        rec.update(to_json(g));
        os << rec.dump() << '\n';
    }
    for (const auto& [n, d] : cache.maximum_digests)
        os << Json{{"kind", "maximum"}, {"n", d.n}, {"count", d.count}, {"sets", d.sets}}.dump() << '\n';
    return os.str();
}

void save_cache_atomic(const std::filesystem::path& path, const CacheFile& cache,
                       const std::function<void()>& before_rename)
{
    const std::string bytes = serialize_cache(cache);
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());

    const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    if (fd < 0)
        throw std::runtime_error("cannot create " + tmp.string() + ": " + errno_text());
    std::size_t written = 0;
    while (written < bytes.size()) {
        const ssize_t w = ::write(fd, bytes.data() + written, bytes.size() - written);
        if (w < 0) {
            if (errno == EINTR)
                continue;
            const std::string err = errno_text();
            ::close(fd);
            throw std::runtime_error("cannot write " + tmp.string() + ": " + err);
        }
        written += static_cast<std::size_t>(w);
    }
    if (::fsync(fd) != 0 || ::close(fd) != 0)
        throw std::runtime_error("cannot sync " + tmp.string() + ": " + errno_text());

    if (before_rename)
        before_rename();

    std::filesystem::rename(tmp, path);
}

CacheLock::CacheLock(const std::filesystem::path& cache_path)
{
    std::filesystem::path lock_path = cache_path;
    lock_path += ".lock";
    fd_ = ::open(lock_path.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0)
        throw std::runtime_error("cannot open lock file " + lock_path.string() + ": " + errno_text());
    if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
        const bool busy = errno == EWOULDBLOCK;
        const std::string err = errno_text();
        ::close(fd_);
        fd_ = -1;
        if (busy)
            throw CacheBusyError("cache " + cache_path.string() + " is in use by another process");
        throw std::runtime_error("cannot lock " + lock_path.string() + ": " + err);
    }
}

CacheLock::~CacheLock()
{
    if (fd_ >= 0) {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
}

}  // namespace sumfree
