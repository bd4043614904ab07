#include "naco/analysis/disagreement.hpp"

#include "naco/core/errors.hpp"
#include "naco/core/sampling.hpp"

namespace naco::analysis {

DisagreementSample sample_disagreement_pairs(const baselines::ScoreTable& table,
                                             const std::string& metric_a,
                                             const std::string& metric_b, std::size_t k,
                                             std::uint64_t seed) {
    if (!table.has_column(metric_a) || !table.has_column(metric_b)) {
        throw PreconditionError("score table lacks column '" +
                                (table.has_column(metric_a) ? metric_b : metric_a) + "'");
    }
    struct Scored {
        const baselines::RowKey* key;
        double a;
        double b;
    };
    std::vector<Scored> rows;
    for (const auto& row : table.rows()) {
        const auto a = table.get(row, metric_a);
        const auto b = table.get(row, metric_b);
        if (a && b) rows.push_back({&row, *a, *b});
    }

    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const double da = rows[i].a - rows[j].a;
            const double db = rows[i].b - rows[j].b;
            if ((da > 0 && db < 0) || (da < 0 && db > 0)) candidates.emplace_back(i, j);
        }
    }

    DisagreementSample sample;
    sample.available = candidates.size();
    sample.not_enough = candidates.size() < k;
    for (auto idx : core::sample_indices(candidates.size(), k, seed)) {
        const auto [i, j] = candidates[idx];
        sample.pairs.emplace_back(*rows[i].key, *rows[j].key);
    }
    return sample;
}

}  // namespace naco::analysis
