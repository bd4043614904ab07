#pragma once

#include <string>
#include <string_view>

namespace naco::llm {

/// Lowercase hex SHA-256 digest of the given bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace naco::llm
