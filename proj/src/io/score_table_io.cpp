#include "naco/io/score_table_io.hpp"

#include <array>
#include <algorithm>
#include <filesystem>
#include <set>

#include <json.hpp>

#include "naco/core/errors.hpp"
#include "naco/io/csv.hpp"

namespace naco::io {

using json = nlohmann::json;
using baselines::Provenance;

bool is_native_metric(const std::string& name) {
    static const std::array<std::string_view, 12> kNative = {
        "naco",     "n_cand",  "a_cand",             "c_cand",
        "c_cand_abs", "runs_used", "bleu4",          "rouge_l",
        "direct_naturalness", "direct_answerability", "direct_complexity", "direct_total"};
    return std::find(kNative.begin(), kNative.end(), name) != kNative.end();
}

std::string metadata_path(const std::string& table_path) { return table_path + ".meta.json"; }

void write_score_table(const baselines::ScoreTable& table, const std::string& path,
                       const Metadata& metadata) {
    std::vector<std::string> header = {"example_id", "system"};
    for (const auto& c : table.columns()) header.push_back(c.name);
    std::string out = csv_line(header);
    for (const auto& row : table.rows()) {
        std::vector<std::string> fields = {row.example_id, row.system};
        for (const auto& c : table.columns()) {
            const auto v = table.get(row, c.name);
            fields.push_back(v ? format_number(*v) : std::string());
        }
        out += csv_line(fields);
    }
    write_text_file(path, out);

    json columns = json::array();
    for (const auto& c : table.columns()) {
        json col = {{"name", c.name}, {"provenance", std::string(baselines::to_string(c.provenance))}};
        if (!c.fingerprint.empty()) col["fingerprint"] = c.fingerprint;
        columns.push_back(std::move(col));
    }
    json meta = {{"columns", columns}, {"metadata", metadata}};
    write_text_file(metadata_path(path), meta.dump(2) + "\n");
}

Metadata read_score_table_metadata(const std::string& path) {
    if (!std::filesystem::exists(metadata_path(path))) return {};
    try {
        const json meta = json::parse(read_text_file(metadata_path(path)));
        return meta.value("metadata", json::object()).get<Metadata>();
    } catch (const json::exception& e) {
        throw SchemaError(metadata_path(path) + ": " + e.what());
    }
}

baselines::ScoreTable read_score_table(const std::string& path) {
    const std::string text = read_text_file(path);
    if (text.empty()) throw SchemaError(path + ": empty score table");
    if (text.back() != '\n') throw SchemaError(path + ": truncated (no final newline)");
    const auto records = parse_csv(text);
    if (records.empty() || records.front().size() < 2 || records.front()[0] != "example_id" ||
        records.front()[1] != "system") {
        throw SchemaError(path + ": header must start with 'example_id,system'");
    }
    const auto& header = records.front();

    std::map<std::string, std::pair<Provenance, std::string>> declared;
    if (std::filesystem::exists(metadata_path(path))) {
        try {
            const json meta = json::parse(read_text_file(metadata_path(path)));
            for (const auto& col : meta.at("columns")) {
                const auto prov = col.at("provenance").get<std::string>() == "native"
                                      ? Provenance::Native
                                      : Provenance::Ingested;
                declared[col.at("name").get<std::string>()] = {prov, col.value("fingerprint", "")};
            }
        } catch (const json::exception& e) {
            throw SchemaError(metadata_path(path) + ": " + e.what());
        }
    }

    baselines::ScoreTable table;
    std::set<baselines::RowKey> seen;
    for (std::size_t c = 2; c < header.size(); ++c) {
        if (auto it = declared.find(header[c]); it != declared.end()) {
            table.add_column(header[c], it->second.first, it->second.second);
        } else {
            table.add_column(header[c],
                             is_native_metric(header[c]) ? Provenance::Native : Provenance::Ingested);
        }
    }
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        const std::string where = path + ": record " + std::to_string(r + 1);
        if (rec.size() != header.size()) {
            throw SchemaError(where + ": expected " + std::to_string(header.size()) + " fields, got " +
                              std::to_string(rec.size()));
        }
        const baselines::RowKey key{rec[0], rec[1]};
        if (!seen.insert(key).second) {
            throw SchemaError(where + ": duplicate row (" + rec[0] + ", " + rec[1] + ")");
        }
        table.add_row(key);
        for (std::size_t c = 2; c < rec.size(); ++c) {
            if (rec[c].empty()) continue;
            const auto v = parse_number(rec[c]);
            if (!v) throw SchemaError(where + ": column '" + header[c] + "' is not a number");
            table.set(key, header[c], *v);
        }
    }
    return table;
}

}  // namespace naco::io
