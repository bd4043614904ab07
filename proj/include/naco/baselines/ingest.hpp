#pragma once

#include <span>
#include <string>
#include <vector>

#include "naco/baselines/score_table.hpp"
#include "naco/core/types.hpp"

namespace naco::baselines {

struct IngestResult {
    ScoreTable table;               // exactly one Ingested column
    std::vector<RowKey> coverage_gap;  // expected candidates the file did not score
};

/// Reads an externally computed metric (BERTScore, BLEURT, QAScore, RQUGE, ...)
/// from a CSV with header "example_id,system,score".
///
/// Throws SchemaMismatch on a bad header or non-numeric score and DuplicateCell
/// on a repeated (example_id, system). Candidates missing from the file are
/// reported in coverage_gap rather than raised.
IngestResult ingest_external_scores(const std::string& path, const std::string& metric_name,
                                    std::span<const CandidateQuestion> expected = {});

}  // namespace naco::baselines
