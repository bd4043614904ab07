#include "naco/llm/cache.hpp"

#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "naco/core/errors.hpp"
#include "naco/llm/sha256.hpp"

namespace naco::llm {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

bool is_hex_digest(const std::string& s) {
    if (s.size() != 64) return false;
    for (char c : s) {
        if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
    }
    return true;
}

std::string unique_suffix() {
    static std::atomic<std::uint64_t> counter{0};
    std::ostringstream ss;
    ss << ::getpid() << '.' << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
       << counter++;
    return ss.str();
}

}  // namespace

ResponseCache::ResponseCache(fs::path root) : root_(std::move(root)) {}

fs::path ResponseCache::path_for(const CacheKey& key) const {
    if (!is_hex_digest(key.digest)) throw Error("malformed cache key '" + key.digest + "'");
    return root_ / key.digest.substr(0, 2) / (key.digest + ".json");
}

std::optional<std::string> ResponseCache::get(const CacheKey& key) const {
    const fs::path path = path_for(key);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        const json record = json::parse(ss.str());
        const auto digest = record.at("digest").get<std::string>();
        auto response = record.at("response").get<std::string>();
        if (digest != key.digest) {
            throw CacheCorrupt("cache record " + path.string() + " holds digest " + digest);
        }
        if (record.at("response_sha256").get<std::string>() != sha256_hex(response)) {
            throw CacheCorrupt("cache record " + path.string() + " failed its checksum");
        }
        return response;
    } catch (const json::exception& e) {
        throw CacheCorrupt("unreadable cache record " + path.string() + ": " + e.what());
    }
}

bool ResponseCache::put(const CacheKey& key, const CompletionRequest& request,
                        const std::string& response, std::string_view template_version) {
    const fs::path path = path_for(key);
    if (fs::exists(path)) return false;
    fs::create_directories(path.parent_path());

    json summary = {{"provider_id", request.config.provider_id},
                    {"model_name", request.config.model_name},
                    {"run_index", request.run_index},
                    {"prompt_sha256", sha256_hex(request.prompt)},
                    {"prompt_chars", request.prompt.size()}};
    summary["temperature"] =
        request.config.temperature ? json(*request.config.temperature) : json(nullptr);
    if (!template_version.empty()) summary["prompt_template_version"] = template_version;
    const json record = {{"digest", key.digest},
                         {"request", summary},
                         {"response", response},
                         {"response_sha256", sha256_hex(response)},
                         {"timestamp", utc_timestamp()}};

    const fs::path tmp = path.parent_path() / ("." + key.digest + ".tmp." + unique_suffix());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write cache file " + tmp.string());
        out << record.dump(2) << '\n';
        if (!out) throw Error("failed writing cache file " + tmp.string());
    }
    // link(2) refuses to replace an existing name, which gives write-once semantics
    // across threads and processes.
    const int rc = ::link(tmp.c_str(), path.c_str());
    const int err = errno;
    std::error_code ignored;
    fs::remove(tmp, ignored);
    if (rc == 0) return true;
    if (err == EEXIST) return false;
    throw Error("cannot publish cache entry " + path.string() + ": " + std::strerror(err));
}

CacheStats ResponseCache::stats() const {
    CacheStats stats;
    if (!fs::exists(root_)) return stats;
    for (const auto& entry : fs::recursive_directory_iterator(root_)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json" &&
            is_hex_digest(entry.path().stem().string())) {
            ++stats.entries;
            stats.bytes += entry.file_size();
        }
    }
    return stats;
}

std::size_t ResponseCache::clear() {
    std::size_t removed = 0;
    if (!fs::exists(root_)) return removed;
    for (const auto& shard : fs::directory_iterator(root_)) {
        const auto name = shard.path().filename().string();
        if (!shard.is_directory() || name.size() != 2) continue;
        for (const auto& entry : fs::directory_iterator(shard.path())) {
            if (entry.is_regular_file() && is_hex_digest(entry.path().stem().string())) ++removed;
        }
        fs::remove_all(shard.path());
    }
    return removed;
}

}  // namespace naco::llm
