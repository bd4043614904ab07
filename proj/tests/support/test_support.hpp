#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef NACO_SOURCE_DIR
#error "NACO_SOURCE_DIR must point at the source tree"
#endif

namespace naco::test {

inline std::filesystem::path source_path(const std::string& relative) {
    return std::filesystem::path(NACO_SOURCE_DIR) / relative;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << contents;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
        path_ = std::filesystem::temp_directory_path() /
                ("naco-test-" + std::to_string(stamp) + "-" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

// ---------------------------------------------------------------------------
// Brute-force oracles. Written from the textbook definitions, deliberately
// without sharing any code with the library.

/// F1 over two already-normalized token lists, counting multiplicities per
/// distinct token.
inline double oracle_f1(const std::vector<std::string>& pred, const std::vector<std::string>& gold) {
    if (pred.empty() && gold.empty()) return 1.0;
    if (pred.empty() || gold.empty()) return 0.0;
    std::map<std::string, int> cp, cg;
    for (const auto& t : pred) ++cp[t];
    for (const auto& t : gold) ++cg[t];
    int common = 0;
    for (const auto& [tok, n] : cp) {
        auto it = cg.find(tok);
        if (it != cg.end()) common += std::min(n, it->second);
    }
    if (common == 0) return 0.0;
    const double p = static_cast<double>(common) / static_cast<double>(pred.size());
    const double r = static_cast<double>(common) / static_cast<double>(gold.size());
    return 2.0 * p * r / (p + r);
}

inline double oracle_pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

/// Average rank: 1 + #smaller + (#equal - 1) / 2.
inline std::vector<double> oracle_ranks(const std::vector<double>& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        double less = 0, equal = 0;
        for (double w : v) {
            if (w < v[i]) ++less;
            if (w == v[i]) ++equal;
        }
        r[i] = 1.0 + less + (equal - 1.0) / 2.0;
    }
    return r;
}

inline double oracle_spearman(const std::vector<double>& x, const std::vector<double>& y) {
    return oracle_pearson(oracle_ranks(x), oracle_ranks(y));
}

/// tau-b = (C - D) / sqrt((n0 - n1)(n0 - n2)) over all pairs.
inline double oracle_kendall(const std::vector<double>& x, const std::vector<double>& y) {
    double concordant = 0, discordant = 0, ties_x = 0, ties_y = 0, pairs = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            ++pairs;
            const double dx = x[i] - x[j];
            const double dy = y[i] - y[j];
            if (dx == 0) ++ties_x;
            if (dy == 0) ++ties_y;
            if (dx * dy > 0) ++concordant;
            if (dx * dy < 0) ++discordant;
        }
    }
    return (concordant - discordant) / std::sqrt((pairs - ties_x) * (pairs - ties_y));
}

/// Longest common subsequence by enumerating every subsequence of `a`.
inline std::size_t oracle_lcs(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::size_t best = 0;
    const std::uint32_t subsets = 1u << a.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size <= best) continue;
        std::size_t j = 0;
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i) {
            if (!(mask & (1u << i))) continue;
            while (j < b.size() && b[j] != a[i]) ++j;
            if (j == b.size()) ok = false;
            else ++j;
        }
        if (ok) best = size;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Generators.

inline std::vector<std::string> random_tokens(std::mt19937_64& rng, std::size_t max_len,
                                              const std::vector<std::string>& vocab) {
    const std::size_t len = rng() % (max_len + 1);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < len; ++i) out.push_back(vocab[rng() % vocab.size()]);
    return out;
}

inline std::string join(const std::vector<std::string>& tokens, const std::string& sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) s += sep;
        s += tokens[i];
    }
    return s;
}

/// Vector with values drawn from a small set so ties are common.
inline std::vector<double> random_tied_vector(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> v(n);
    const int levels = 2 + static_cast<int>(rng() % 5);
    for (auto& x : v) x = static_cast<double>(rng() % levels) * 0.5 - 1.0;
    return v;
}

}  // namespace naco::test
