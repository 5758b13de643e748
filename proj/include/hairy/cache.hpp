#pragma once

#include "hairy/combinatorics.hpp"

#include <cstddef>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

namespace hairy {

/// Hex digest identifying the relation sets and elimination code. Cache
/// entries written under a different digest are ignored.
const std::string& engine_version();

/// FNV-1a 64-bit digest of a string, as 16 hex digits.
std::string content_hash(const std::string& text);

struct CacheRecord {
    std::string spec;
    std::vector<int> weight;
    std::size_t ambient_dim = 0;
    std::size_t rank = 0;
    std::size_t quotient_dim = 0;
    std::string engine_version_hash;
};

/// Quotient dimensions keyed by (spec, weight). Always keeps an in-memory
/// table; with a directory it also persists one JSON file per entry.
/// Safe for concurrent use.
class QuotientCache {
public:
    QuotientCache() = default;
    explicit QuotientCache(std::filesystem::path dir);

    std::optional<CacheRecord> find(const std::string& spec_key, const WeightVector& weight);
    void store(const CacheRecord& record);

    std::size_t hits() const;
    std::size_t misses() const;

    /// File that holds (or would hold) the entry for this key.
    std::filesystem::path file_for(const std::string& spec_key, const WeightVector& weight) const;

private:
    static std::string key_of(const std::string& spec_key, const std::vector<int>& weight);

    std::optional<std::filesystem::path> dir_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, CacheRecord> memory_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

}  // namespace hairy
