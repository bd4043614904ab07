#include "naco/baselines/ingest.hpp"

#include "naco/core/errors.hpp"
#include "naco/io/csv.hpp"
#include "naco/llm/sha256.hpp"

namespace naco::baselines {

IngestResult ingest_external_scores(const std::string& path, const std::string& metric_name,
                                    std::span<const CandidateQuestion> expected) {
    const std::string text = io::read_text_file(path);
    std::vector<std::vector<std::string>> records;
    try {
        records = io::parse_csv(text);
    } catch (const SchemaError& e) {
        throw SchemaMismatch(path + ": " + e.what());
    }
    if (records.empty() || records.front() != std::vector<std::string>{"example_id", "system", "score"}) {
        throw SchemaMismatch(path + ": header must be exactly 'example_id,system,score'");
    }

    IngestResult result;
    result.table.add_column(metric_name, Provenance::Ingested, llm::sha256_hex(text));
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& rec = records[i];
        if (rec.size() == 1 && rec[0].empty()) continue;  // blank line
        const std::string where = path + ":" + std::to_string(i + 1);
        if (rec.size() != 3) throw SchemaMismatch(where + ": expected 3 fields");
        const auto score = io::parse_number(rec[2]);
        if (!score) throw SchemaMismatch(where + ": score '" + rec[2] + "' is not a decimal number");
        const RowKey key{rec[0], rec[1]};
        if (result.table.get(key, metric_name)) {
            throw DuplicateCell(where + ": duplicate row for (" + rec[0] + ", " + rec[1] + ")");
        }
        result.table.set(key, metric_name, *score);
    }
    for (const auto& candidate : expected) {
        const RowKey key{candidate.example_id, candidate.system};
        if (!result.table.get(key, metric_name)) result.coverage_gap.push_back(key);
    }
    return result;
}

}  // namespace naco::baselines
