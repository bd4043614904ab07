#include "naco/analysis/normalize.hpp"

#include <algorithm>

#include "naco/core/errors.hpp"

namespace naco::analysis {

std::vector<double> min_max_normalize(std::span<const double> scores) {
    if (scores.empty()) throw EmptyList("min_max_normalize needs at least one score");
    const auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
    const double min = *lo;
    const double range = *hi - *lo;
    std::vector<double> out;
    out.reserve(scores.size());
    for (double s : scores) out.push_back(range == 0.0 ? 0.5 : (s - min) / range);
    return out;
}

baselines::ScoreTable normalize_columns(const baselines::ScoreTable& table) {
    baselines::ScoreTable out;
    for (const auto& info : table.columns()) out.add_column(info.name, info.provenance, info.fingerprint);
    for (const auto& row : table.rows()) out.add_row(row);
    for (const auto& info : table.columns()) {
        std::vector<const baselines::RowKey*> keys;
        std::vector<double> values;
        for (const auto& row : table.rows()) {
            if (auto v = table.get(row, info.name)) {
                keys.push_back(&row);
                values.push_back(*v);
            }
        }
        if (values.empty()) continue;
        const auto normalized = min_max_normalize(values);
        for (std::size_t i = 0; i < keys.size(); ++i) out.set(*keys[i], info.name, normalized[i]);
    }
    return out;
}

}  // namespace naco::analysis
