#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace naco::baselines {

enum class Provenance { Native, Ingested };

std::string_view to_string(Provenance provenance);

struct RowKey {
    std::string example_id;
    std::string system;

    friend auto operator<=>(const RowKey&, const RowKey&) = default;
};

struct ColumnInfo {
    std::string name;
    Provenance provenance = Provenance::Native;
    std::string fingerprint;  // sha256 of the source file for ingested columns

    friend bool operator==(const ColumnInfo&, const ColumnInfo&) = default;
};

/// Metric scores keyed by (example_id, system). Rows and columns keep their
/// insertion order; a cell may be written only once.
class ScoreTable {
public:
    /// Adds a column, or returns the existing one. Throws SchemaMismatch when the
    /// column exists with a different provenance.
    void add_column(std::string name, Provenance provenance = Provenance::Native,
                    std::string fingerprint = {});
    void add_row(const RowKey& key);

    /// Writes a cell, creating row and (native) column as needed.
    /// Throws DuplicateCell when the cell already holds a value.
    void set(const RowKey& key, std::string_view metric, double value);

    std::optional<double> get(const RowKey& key, std::string_view metric) const;
    bool has_column(std::string_view metric) const;
    const ColumnInfo& column(std::string_view metric) const;

    const std::vector<RowKey>& rows() const { return rows_; }
    const std::vector<ColumnInfo>& columns() const { return columns_; }

    /// Copies every column and cell of `other` in. Conflicting cells raise DuplicateCell.
    void merge(const ScoreTable& other);

    friend bool operator==(const ScoreTable&, const ScoreTable&) = default;

private:
    std::size_t column_index(std::string_view metric) const;

    std::vector<RowKey> rows_;
    std::map<RowKey, std::size_t> row_index_;
    std::vector<ColumnInfo> columns_;
    std::vector<std::vector<std::optional<double>>> cells_;  // [row][column]
};

}  // namespace naco::baselines
