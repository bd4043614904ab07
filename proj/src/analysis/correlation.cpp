#include "naco/analysis/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "naco/core/errors.hpp"

namespace naco::analysis {

namespace {

void check_inputs(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw DegenerateInput("correlation inputs differ in length");
    if (x.size() < 2) throw DegenerateInput("correlation needs at least two points");
    auto constant = [](std::span<const double> v) {
        return std::all_of(v.begin(), v.end(), [&](double e) { return e == v.front(); });
    };
    if (constant(x) || constant(y)) throw DegenerateInput("correlation input is constant");
}

double clamp_unit(double r) { return std::clamp(r, -1.0, 1.0); }

// Counts pairs out of order while merge-sorting `v` ascending.
long long count_inversions(std::vector<double>& v, std::vector<double>& scratch, std::size_t lo,
                           std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    long long swaps = count_inversions(v, scratch, lo, mid) + count_inversions(v, scratch, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (v[j] < v[i]) {
            swaps += static_cast<long long>(mid - i);
            scratch[k++] = v[j++];
        } else {
            scratch[k++] = v[i++];
        }
    }
    while (i < mid) scratch[k++] = v[i++];
    while (j < hi) scratch[k++] = v[j++];
    std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
              scratch.begin() + static_cast<std::ptrdiff_t>(hi),
              v.begin() + static_cast<std::ptrdiff_t>(lo));
    return swaps;
}

// Sum of t(t-1)/2 over runs of equal values in a sorted range.
template <typename Eq>
long long tied_pairs(std::size_t n, Eq equal) {
    long long total = 0;
    long long run = 1;
    for (std::size_t i = 1; i < n; ++i) {
        if (equal(i - 1, i)) {
            ++run;
        } else {
            total += run * (run - 1) / 2;
            run = 1;
        }
    }
    return total + run * (run - 1) / 2;
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
    check_inputs(x, y);
    const auto n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return clamp_unit(sxy / std::sqrt(sxx * syy));
}

std::vector<double> fractional_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        const double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
    check_inputs(x, y);
    const auto rx = fractional_ranks(x);
    const auto ry = fractional_ranks(y);
    return pearson(rx, ry);
}

double kendall_tau(std::span<const double> x, std::span<const double> y) {
    check_inputs(x, y);
    const std::size_t n = x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return x[a] != x[b] ? x[a] < x[b] : y[a] < y[b];
    });

    const auto total_pairs = static_cast<long long>(n) * static_cast<long long>(n - 1) / 2;
    const long long x_ties = tied_pairs(n, [&](std::size_t a, std::size_t b) {
        return x[order[a]] == x[order[b]];
    });
    const long long joint_ties = tied_pairs(n, [&](std::size_t a, std::size_t b) {
        return x[order[a]] == x[order[b]] && y[order[a]] == y[order[b]];
    });

    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) ys[i] = y[order[i]];
    std::vector<double> scratch(n);
    const long long discordant = count_inversions(ys, scratch, 0, n);
    const long long y_ties = tied_pairs(n, [&](std::size_t a, std::size_t b) { return ys[a] == ys[b]; });

    const double numerator = static_cast<double>(total_pairs - x_ties - y_ties + joint_ties - 2 * discordant);
    const double denominator = std::sqrt(static_cast<double>(total_pairs - x_ties) *
                                         static_cast<double>(total_pairs - y_ties));
    return clamp_unit(numerator / denominator);
}

CorrelationReport correlate(std::string metric, std::string target, std::span<const double> x,
                            std::span<const double> y) {
    return {std::move(metric), std::move(target), pearson(x, y), spearman(x, y), kendall_tau(x, y),
            x.size()};
}

}  // namespace naco::analysis
