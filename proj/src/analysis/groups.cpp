#include "naco/analysis/groups.hpp"

#include <algorithm>
#include <set>

#include "naco/core/errors.hpp"

namespace naco::analysis {

std::optional<double> GroupSummary::mean(const std::string& group, const std::string& metric) const {
    auto it = stats.find({group, metric});
    if (it == stats.end()) return std::nullopt;
    return it->second.mean;
}

GroupSummary group_summary(const baselines::ScoreTable& table,
                           const std::map<std::string, std::string>& group_of) {
    GroupSummary summary;
    for (const auto& info : table.columns()) summary.metrics.push_back(info.name);

    std::map<std::pair<std::string, std::string>, double> sums;
    for (const auto& row : table.rows()) {
        std::string group = row.system;
        if (!group_of.empty()) {
            auto it = group_of.find(row.system);
            if (it == group_of.end()) {
                throw PreconditionError("system '" + row.system + "' has no group tag");
            }
            group = it->second;
        }
        if (std::find(summary.groups.begin(), summary.groups.end(), group) == summary.groups.end()) {
            summary.groups.push_back(group);
        }
        for (const auto& metric : summary.metrics) {
            auto& stat = summary.stats[{group, metric}];
            if (auto v = table.get(row, metric)) {
                sums[{group, metric}] += *v;
                ++stat.count;
            }
        }
    }
    std::set<std::string> tagged;
    for (const auto& [system, group] : group_of) tagged.insert(group);
    for (const auto& group : tagged) {
        if (std::find(summary.groups.begin(), summary.groups.end(), group) == summary.groups.end()) {
            throw EmptyGroup("group '" + group + "' has no scored rows");
        }
    }

    for (auto& [key, stat] : summary.stats) {
        if (stat.count > 0) stat.mean = sums[key] / static_cast<double>(stat.count);
    }
    for (const auto& metric : summary.metrics) {
        for (std::size_t i = 0; i < summary.groups.size(); ++i) {
            for (std::size_t j = i + 1; j < summary.groups.size(); ++j) {
                const auto a = summary.mean(summary.groups[i], metric);
                const auto b = summary.mean(summary.groups[j], metric);
                if (a && b) summary.gaps.push_back({metric, summary.groups[i], summary.groups[j], *a - *b});
            }
        }
    }
    return summary;
}

}  // namespace naco::analysis
