#pragma once

// In-memory memo tables and an optional on-disk store behind them.
//
// On-disk entries are small text files:
//
//     hsop-cache <version>
//     <key>
//     <payload lines...>
//     checksum <16 hex digits>
//
// The checksum is FNV-1a over everything before the checksum line. A file
// that is truncated, has the wrong version or key, or fails the checksum is
// ignored and the value recomputed.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <system_error>

namespace hsop {

inline constexpr int kCacheFormatVersion = 1;

inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

class PersistentStore {
public:
    /// Process-wide store; disabled until a directory is set.
    static PersistentStore& instance() {
        static PersistentStore store;
        return store;
    }

    void set_directory(std::optional<std::filesystem::path> dir) {
        std::unique_lock lock(mutex_);
        dir_ = std::move(dir);
        if (dir_) {
            std::error_code ec;
            std::filesystem::create_directories(*dir_, ec);
        }
    }

    std::optional<std::filesystem::path> directory() const {
        std::shared_lock lock(mutex_);
        return dir_;
    }

    /// Returns the payload stored under `key`, or nothing if absent or corrupt.
    std::optional<std::string> load(const std::string& key) const {
        auto dir = directory();
        if (!dir) return std::nullopt;
        std::ifstream in(*dir / file_name(key), std::ios::binary);
        if (!in) return std::nullopt;
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();

        const auto tail = text.rfind("checksum ");
        if (tail == std::string::npos) return std::nullopt;
        const std::string body = text.substr(0, tail);
        std::uint64_t expected = 0;
        try {
            std::size_t used = 0;
            const std::string hex = text.substr(tail + 9);
            expected = std::stoull(hex, &used, 16);
            if (used != 16) return std::nullopt;
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (fnv1a64(body) != expected) return std::nullopt;

        const std::string header = header_for(key);
        if (body.compare(0, header.size(), header) != 0) return std::nullopt;
        return body.substr(header.size());
    }

    /// Writes atomically (temp file + rename); failures are silently dropped.
    void store(const std::string& key, const std::string& payload) const {
        auto dir = directory();
        if (!dir) return;
        const std::string body = header_for(key) + payload;
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(body)));
        const auto target = *dir / file_name(key);
        auto tmp = target;
        tmp += ".tmp" + std::to_string(fnv1a64(payload) & 0xffff);
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) return;
            out << body << "checksum " << hex;
            if (!out) return;
        }
        std::error_code ec;
        std::filesystem::rename(tmp, target, ec);
        if (ec) std::filesystem::remove(tmp, ec);
    }

    static std::string file_name(const std::string& key) { return key + ".cache"; }

private:
    static std::string header_for(const std::string& key) {
        return "hsop-cache " + std::to_string(kCacheFormatVersion) + "\n" + key + "\n";
    }

    mutable std::shared_mutex mutex_;
    std::optional<std::filesystem::path> dir_;
};

/// Thread-safe memo table. Values are immutable once inserted; concurrent
/// computations of the same key are allowed and the first insert wins.
template <class Key, class Value>
class MemoTable {
public:
    using Ptr = std::shared_ptr<const Value>;

    template <class Compute>
    Ptr get_or_compute(const Key& key, Compute&& compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        Ptr fresh = std::make_shared<const Value>(compute());
        std::unique_lock lock(mutex_);
        auto [it, inserted] = table_.emplace(key, std::move(fresh));
        return it->second;
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Ptr> table_;
};

}  // namespace hsop
