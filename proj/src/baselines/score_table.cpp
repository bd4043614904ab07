#include "naco/baselines/score_table.hpp"

#include "naco/core/errors.hpp"

namespace naco::baselines {

std::string_view to_string(Provenance provenance) {
    return provenance == Provenance::Native ? "native" : "ingested";
}

std::size_t ScoreTable::column_index(std::string_view metric) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i].name == metric) return i;
    }
    return columns_.size();
}

void ScoreTable::add_column(std::string name, Provenance provenance, std::string fingerprint) {
    if (name == "example_id" || name == "system" || name.empty()) {
        throw SchemaMismatch("invalid metric column name '" + name + "'");
    }
    const auto idx = column_index(name);
    if (idx < columns_.size()) {
        if (columns_[idx].provenance != provenance) {
            throw SchemaMismatch("column '" + name + "' already exists with provenance " +
                                 std::string(to_string(columns_[idx].provenance)));
        }
        return;
    }
    columns_.push_back({std::move(name), provenance, std::move(fingerprint)});
    for (auto& row : cells_) row.emplace_back();
}

void ScoreTable::add_row(const RowKey& key) {
    if (row_index_.contains(key)) return;
    row_index_.emplace(key, rows_.size());
    rows_.push_back(key);
    cells_.emplace_back(columns_.size());
}

void ScoreTable::set(const RowKey& key, std::string_view metric, double value) {
    auto col = column_index(metric);
    if (col == columns_.size()) {
        add_column(std::string(metric));
        col = columns_.size() - 1;
    }
    add_row(key);
    auto& cell = cells_[row_index_.at(key)][col];
    if (cell) {
        throw DuplicateCell("duplicate cell (" + key.example_id + ", " + key.system + ", " +
                            std::string(metric) + ")");
    }
    cell = value;
}

std::optional<double> ScoreTable::get(const RowKey& key, std::string_view metric) const {
    const auto col = column_index(metric);
    const auto row = row_index_.find(key);
    if (col == columns_.size() || row == row_index_.end()) return std::nullopt;
    return cells_[row->second][col];
}

bool ScoreTable::has_column(std::string_view metric) const {
    return column_index(metric) < columns_.size();
}

const ColumnInfo& ScoreTable::column(std::string_view metric) const {
    const auto col = column_index(metric);
    if (col == columns_.size()) throw SchemaMismatch("no column '" + std::string(metric) + "'");
    return columns_[col];
}

void ScoreTable::merge(const ScoreTable& other) {
    for (const auto& info : other.columns_) add_column(info.name, info.provenance, info.fingerprint);
    for (std::size_t r = 0; r < other.rows_.size(); ++r) {
        add_row(other.rows_[r]);
        for (std::size_t c = 0; c < other.columns_.size(); ++c) {
            if (const auto& v = other.cells_[r][c]) set(other.rows_[r], other.columns_[c].name, *v);
        }
    }
}

}  // namespace naco::baselines
