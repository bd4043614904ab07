#pragma once

#include <map>
#include <string>

#include "naco/baselines/score_table.hpp"

namespace naco::io {

using Metadata = std::map<std::string, std::string>;

/// Sidecar holding column provenance and run metadata for a score table file.
std::string metadata_path(const std::string& table_path);

/// Writes "example_id,system,<metric>..." CSV (shortest round-trip decimals,
/// empty field for a missing cell) plus a `<path>.meta.json` sidecar.
void write_score_table(const baselines::ScoreTable& table, const std::string& path,
                       const Metadata& metadata = {});

/// Reads a score table. Without a sidecar, columns produced by this toolkit are
/// marked native and any other column ingested. Throws SchemaError on a
/// malformed or truncated file.
baselines::ScoreTable read_score_table(const std::string& path);

Metadata read_score_table_metadata(const std::string& path);

/// Metric columns this toolkit computes itself.
bool is_native_metric(const std::string& name);

}  // namespace naco::io
