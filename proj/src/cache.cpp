#include "hairy/cache.hpp"

#include <json.hpp>

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace hairy {

namespace {

// Bump when relation sets, bases or the elimination change meaning.
constexpr const char* kEngineDescriptor = "hairy-engine/relations-3/elim-ff-markowitz-1";

}  // namespace

std::string content_hash(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h = (h ^ ch) * 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

const std::string& engine_version() {
    static const std::string version = content_hash(kEngineDescriptor);
    return version;
}

QuotientCache::QuotientCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(*dir_);
}

std::string QuotientCache::key_of(const std::string& spec_key, const std::vector<int>& weight) {
    std::ostringstream os;
    os << spec_key << '|';
    for (std::size_t i = 0; i < weight.size(); ++i) {
        os << (i ? "," : "") << weight[i];
    }
    return os.str();
}

std::filesystem::path QuotientCache::file_for(const std::string& spec_key, const WeightVector& weight) const {
    const auto name = content_hash(key_of(spec_key, weight.multidegrees)) + "-" + engine_version() + ".json";
    return dir_ ? *dir_ / name : std::filesystem::path(name);
}

std::optional<CacheRecord> QuotientCache::find(const std::string& spec_key, const WeightVector& weight) {
    const auto key = key_of(spec_key, weight.multidegrees);
    {
        std::lock_guard lock(mutex_);
        if (auto it = memory_.find(key); it != memory_.end()) {
            ++hits_;
            return it->second;
        }
    }
    if (dir_) {
        std::ifstream in(file_for(spec_key, weight));
        if (in) {
            try {
                const auto j = nlohmann::json::parse(in);
                CacheRecord r;
                r.spec = j.at("spec").get<std::string>();
                r.weight = j.at("weight").get<std::vector<int>>();
                r.ambient_dim = j.at("ambient_dim").get<std::size_t>();
                r.rank = j.at("rank").get<std::size_t>();
                r.quotient_dim = j.at("quotient_dim").get<std::size_t>();
                r.engine_version_hash = j.at("engine_version_hash").get<std::string>();
                // A hash collision on the file name must not leak a wrong value.
                if (r.engine_version_hash == engine_version() && r.spec == spec_key && r.weight == weight.multidegrees) {
                    std::lock_guard lock(mutex_);
                    memory_.emplace(key, r);
                    ++hits_;
                    return r;
                }
            } catch (const nlohmann::json::exception&) {
                // Unreadable entries are recomputed and overwritten.
            }
        }
    }
    std::lock_guard lock(mutex_);
    ++misses_;
    return std::nullopt;
}

void QuotientCache::store(const CacheRecord& record) {
    {
        std::lock_guard lock(mutex_);
        memory_[key_of(record.spec, record.weight)] = record;
    }
    if (!dir_) {
        return;
    }
    nlohmann::ordered_json j;
    j["spec"] = record.spec;
    j["weight"] = record.weight;
    j["ambient_dim"] = record.ambient_dim;
    j["rank"] = record.rank;
    j["quotient_dim"] = record.quotient_dim;
    j["engine_version_hash"] = record.engine_version_hash;
    const auto path = file_for(record.spec, WeightVector{record.weight});
    // Write then rename so concurrent readers never see a partial file.
    auto tmp = path;
    tmp += ".tmp" + std::to_string(::getpid()) + "-" +
           std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream out(tmp);
        out << j.dump(2) << '\n';
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
    }
}

std::size_t QuotientCache::hits() const {
    std::lock_guard lock(mutex_);
    return hits_;
}

std::size_t QuotientCache::misses() const {
    std::lock_guard lock(mutex_);
    return misses_;
}

}  // namespace hairy
