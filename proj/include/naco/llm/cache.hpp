#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "naco/llm/model_config.hpp"

namespace naco::llm {

struct CacheStats {
    std::size_t entries = 0;
    std::uintmax_t bytes = 0;
};

/// Content-addressed, write-once response store. One JSON record per key at
/// `<root>/<first two hex chars>/<digest>.json`:
///   {digest, request: {...}, response, response_sha256, timestamp}
/// Readers never observe a partial record; an existing entry is never replaced.
class ResponseCache {
public:
    explicit ResponseCache(std::filesystem::path root);

    const std::filesystem::path& root() const { return root_; }
    std::filesystem::path path_for(const CacheKey& key) const;

    /// Stored response, or nullopt on a miss. Throws CacheCorrupt when the record
    /// is unreadable or fails its integrity check.
    std::optional<std::string> get(const CacheKey& key) const;

    /// Persists the response unless the key already exists. Returns false when an
    /// entry was already present (its content is left untouched).
    bool put(const CacheKey& key, const CompletionRequest& request, const std::string& response,
             std::string_view template_version = {});

    CacheStats stats() const;
    /// Removes every cache record. Returns the number removed.
    std::size_t clear();

private:
    std::filesystem::path root_;
};

}  // namespace naco::llm
