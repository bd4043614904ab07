#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "naco/baselines/score_table.hpp"

namespace naco::analysis {

struct GroupMetricStat {
    std::optional<double> mean;  // absent when no row of the group has the metric
    std::size_t count = 0;
};

struct GroupGap {
    std::string metric;
    std::string group_a;
    std::string group_b;
    double gap = 0.0;  // mean(group_a) - mean(group_b)
};

struct GroupSummary {
    std::vector<std::string> groups;   // first-appearance order
    std::vector<std::string> metrics;  // table column order
    std::map<std::pair<std::string, std::string>, GroupMetricStat> stats;  // (group, metric)
    std::vector<GroupGap> gaps;        // every unordered pair of groups, per metric

    std::optional<double> mean(const std::string& group, const std::string& metric) const;
};

/// Arithmetic means per (group, metric) plus pairwise mean gaps. `group_of`
/// maps a row's system label to its group; an empty map uses the system label
/// itself. Throws PreconditionError when a row's system has no tag and
/// EmptyGroup when a tagged group owns no row.
GroupSummary group_summary(const baselines::ScoreTable& table,
                           const std::map<std::string, std::string>& group_of = {});

}  // namespace naco::analysis
