#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "naco/app/commands.hpp"
#include "naco/core/errors.hpp"
#include "naco/io/csv.hpp"
#include "naco/io/profile_io.hpp"
#include "naco/io/score_table_io.hpp"
#include "naco/llm/mock_provider.hpp"
#include "test_support.hpp"

using namespace naco;
using naco::test::source_path;

namespace {

struct Demo {
    naco::test::TempDir dir;
    std::shared_ptr<llm::MockProvider> mock =
        std::make_shared<llm::MockProvider>(source_path("data/demo/fixtures.json"));
    std::ostringstream log;
    app::Environment env{mock, &log};

    app::Settings settings(app::Settings extra = {}) const {
        app::Settings s = {
            {"provider", "mock"},
            {"examples", source_path("data/demo/examples.jsonl").string()},
            {"candidates", source_path("data/demo/candidates.jsonl").string()},
            {"cache", dir.file("cache")},
            {"profile", dir.file("profile.json")},
            {"runs", "3"},
            {"seed", "7"},
            {"parallelism", "4"},
        };
        for (auto& [k, v] : extra) s[k] = v;
        return s;
    }

    app::RunConfig config(app::Settings extra = {}) const { return app::resolve_config(settings(std::move(extra))); }

    // calibrate + score; returns the score table path.
    std::string score(app::Settings extra = {}) {
        app::cmd_calibrate(config(), env);
        const auto out = dir.file("scores.csv");
        extra["out"] = out;
        const auto outcome = app::cmd_score(config(std::move(extra)), env);
        EXPECT_TRUE(outcome.failures.empty());
        return out;
    }
};

std::vector<std::map<std::string, std::string>> read_rows(const std::string& path) {
    const auto rows = io::parse_csv(naco::test::read_file(path));
    std::vector<std::map<std::string, std::string>> out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        std::map<std::string, std::string> row;
        for (std::size_t c = 0; c < rows[0].size() && c < rows[r].size(); ++c) row[rows[0][c]] = rows[r][c];
        out.push_back(std::move(row));
    }
    return out;
}

double num(const std::string& s) { return *io::parse_number(s); }

}  // namespace

TEST(Commands, DemoScoresMatchOracle) {
    Demo demo;
    const auto table = io::read_score_table(demo.score());
    const auto expected = read_rows(source_path("tests/data/demo_expected_scores.csv").string());
    ASSERT_EQ(table.rows().size(), expected.size());
    for (const auto& row : expected) {
        const baselines::RowKey key{row.at("example_id"), row.at("system")};
        for (const char* col : {"naco", "n_cand", "a_cand", "c_cand", "c_cand_abs", "runs_used"}) {
            const auto got = table.get(key, col);
            ASSERT_TRUE(got.has_value()) << key.example_id << " " << col;
            EXPECT_NEAR(*got, num(row.at(col)), 1e-12) << key.example_id << "/" << key.system << " " << col;
        }
    }
}

TEST(Commands, WarmCacheIsByteIdenticalWithoutProviderCalls) {
    Demo demo;
    const auto out = demo.score();
    const auto first = naco::test::read_file(out);
    const auto first_meta = naco::test::read_file(out + ".meta.json");
    EXPECT_GT(demo.mock->invocations(), 0u);

    demo.mock->reset_counters();
    const auto outcome = app::cmd_score(demo.config({{"out", out}}), demo.env);
    EXPECT_EQ(demo.mock->invocations(), 0u);
    EXPECT_EQ(outcome.gateway.provider_invocations, 0u);
    EXPECT_GT(outcome.gateway.cache_hits, 0u);
    EXPECT_EQ(naco::test::read_file(out), first);
    EXPECT_EQ(naco::test::read_file(out + ".meta.json"), first_meta);
}

TEST(Commands, ParallelismDoesNotChangeOutput) {
    Demo a;
    Demo b;
    const auto serial = naco::test::read_file(a.score({{"parallelism", "1"}}));
    const auto wide = naco::test::read_file(b.score({{"parallelism", "16"}}));
    EXPECT_EQ(serial, wide);
}

TEST(Commands, CalibrationFixtureGivesModeTwo) {
    naco::test::TempDir dir;
    auto mock = std::make_shared<llm::MockProvider>(source_path("tests/data/calibration/fixtures.json"));
    std::ostringstream log;
    const auto config = app::resolve_config({{"provider", "mock"},
                                             {"examples", source_path("tests/data/calibration/examples.jsonl").string()},
                                             {"cache", dir.file("cache")},
                                             {"profile", dir.file("p.json")}});
    app::cmd_calibrate(config, {mock, &log});
    const auto profile = io::read_profile(dir.file("p.json"));
    EXPECT_EQ(profile.expected_complexity, 2);
    EXPECT_EQ(profile.sample_size, 10);
    EXPECT_EQ(profile.histogram, (std::map<int, int>{{1, 2}, {2, 5}, {3, 3}}));
    EXPECT_EQ(mock->invocations(), 10u);
}

TEST(Commands, CalibrateWithoutReferencesFailsBeforeAnyCall) {
    Demo demo;
    const auto examples = demo.dir.file("noref.jsonl");
    naco::test::write_file(examples,
                           R"({"id": "x", "passages": ["p", "q"], "answer": "a", "dataset_id": "d"})" "\n");
    EXPECT_THROW(app::cmd_calibrate(demo.config({{"examples", examples}}), demo.env), PreconditionError);
    EXPECT_EQ(demo.mock->invocations(), 0u);
}

TEST(Commands, ScoreWithoutProfileFails) {
    Demo demo;
    EXPECT_THROW(app::cmd_score(demo.config({{"out", demo.dir.file("s.csv")}}), demo.env), PreconditionError);
    EXPECT_EQ(demo.mock->invocations(), 0u);
}

TEST(Commands, OverrideRequiresReferences) {
    Demo demo;
    const auto examples = demo.dir.file("noref.jsonl");
    naco::test::write_file(examples,
                           R"({"id": "demo-1", "passages": ["p", "q"], "answer": "a", "dataset_id": "d"})" "\n");
    const auto candidates = demo.dir.file("c.jsonl");
    naco::test::write_file(candidates, R"({"example_id": "demo-1", "system": "s", "text": "q?"})" "\n");
    EXPECT_THROW(app::cmd_score(demo.config({{"examples", examples},
                                             {"candidates", candidates},
                                             {"override_expected_from_reference", "true"},
                                             {"out", demo.dir.file("s.csv")}}),
                                demo.env),
                 PreconditionError);
}

TEST(Commands, OverrideUsesReferenceComplexity) {
    Demo demo;
    const auto out = demo.dir.file("o.csv");
    app::cmd_score(demo.config({{"override_expected_from_reference", "true"}, {"out", out}}), demo.env);
    const auto meta = io::read_score_table_metadata(out);
    EXPECT_EQ(meta.at("expected_complexity_source"), "reference-question");
    EXPECT_EQ(io::read_score_table(out).rows().size(), 20u);
}

TEST(Commands, HardProviderErrorAborts) {
    struct Denied : llm::Provider {
        std::string complete(const llm::CompletionRequest&) override { throw AuthError("bad key"); }
    };
    Demo demo;
    app::cmd_calibrate(demo.config(), demo.env);
    app::Environment env{std::make_shared<Denied>(), &demo.log};
    EXPECT_THROW(app::cmd_score(demo.config({{"out", demo.dir.file("s.csv")}, {"cache", demo.dir.file("other")}}), env),
                 AuthError);
}

TEST(Commands, DirectEvalColumns) {
    Demo demo;
    const auto out = demo.dir.file("d.csv");
    const auto outcome = app::cmd_score(demo.config({{"mode", "direct-eval"}, {"out", out}}), demo.env);
    EXPECT_TRUE(outcome.failures.empty());
    const auto table = io::read_score_table(out);
    ASSERT_EQ(table.rows().size(), 20u);
    for (const auto& key : table.rows()) {
        const double n = *table.get(key, "direct_naturalness");
        const double a = *table.get(key, "direct_answerability");
        const double c = *table.get(key, "direct_complexity");
        for (double v : {n, a, c}) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 2.0);
        }
        EXPECT_NEAR(*table.get(key, "direct_total"), n + a + c, 1e-12);
        EXPECT_EQ(*table.get(key, "runs_used"), 3.0);
    }
    EXPECT_FALSE(table.has_column("naco"));
}

TEST(Commands, CorrelateMatchesOracle) {
    Demo demo;
    const auto scores = demo.score();
    const auto out = demo.dir.file("corr.csv");
    app::cmd_correlate(demo.config({{"scores", scores},
                                    {"ratings", source_path("data/demo/ratings.jsonl").string()},
                                    {"disagreement_pairs", "3"},
                                    {"out", out}}),
                       demo.env);
    std::map<std::string, std::map<std::string, std::string>> naco_rows;
    for (auto& row : read_rows(out)) {
        if (row.at("metric") == "naco") naco_rows[row.at("target")] = row;
    }
    const auto expected = read_rows(source_path("tests/data/demo_expected_correlations.csv").string());
    ASSERT_EQ(expected.size(), 4u);
    for (const auto& row : expected) {
        const auto& got = naco_rows.at(row.at("target"));
        for (const char* col : {"pearson", "spearman", "kendall"}) {
            EXPECT_NEAR(num(got.at(col)), num(row.at(col)), 1e-9) << row.at("target") << " " << col;
        }
        EXPECT_EQ(got.at("n"), row.at("n"));
    }
    EXPECT_TRUE(std::filesystem::exists(out + ".txt"));
    std::map<std::string, int> per_metric;
    for (const auto& row : read_rows(out + ".disagreements.csv")) {
        EXPECT_EQ(row.at("metric_a"), "naco");
        ++per_metric[row.at("metric_b")];
    }
    EXPECT_FALSE(per_metric.empty());
    for (const auto& [metric, count] : per_metric) EXPECT_LE(count, 3) << metric;
}

TEST(Commands, GroupMeansAreOrdered) {
    Demo demo;
    const auto scores = demo.score();
    const auto out = demo.dir.file("groups.csv");
    app::cmd_groups(demo.config({{"scores", scores},
                                 {"groups", source_path("data/demo/groups.json").string()},
                                 {"out", out}}),
                    demo.env);
    std::map<std::string, double> mean;
    for (const auto& row : read_rows(out)) {
        if (row.at("metric") == "naco") mean[row.at("group")] = num(row.at("mean"));
    }
    EXPECT_NEAR(mean.at("G1"), 0.874074074074074, 1e-9);
    EXPECT_NEAR(mean.at("G2"), 0.8, 1e-9);
    EXPECT_NEAR(mean.at("G3"), 0.111111111111111, 1e-9);
    EXPECT_NEAR(mean.at("G4"), 0.0, 1e-12);
    EXPECT_TRUE(std::filesystem::exists(out + ".gaps.csv"));
}

TEST(Commands, CacheClearThenStats) {
    Demo demo;
    demo.score();
    std::ostringstream before;
    app::cmd_cache(demo.config(), "stats", {nullptr, &before});
    EXPECT_EQ(before.str().find("cache: 0 entries"), std::string::npos) << before.str();
    app::cmd_cache(demo.config(), "clear", {nullptr, &demo.log});
    std::ostringstream after;
    app::cmd_cache(demo.config(), "stats", {nullptr, &after});
    EXPECT_NE(after.str().find("cache: 0 entries"), std::string::npos) << after.str();
    EXPECT_THROW(app::cmd_cache(demo.config(), "purge", demo.env), PreconditionError);
}

TEST(Commands, BaselineFiles) {
    Demo demo;
    const auto out = demo.dir.file("base.csv");
    const auto outcome = app::cmd_baseline(demo.config({{"metric", "all"},
                                                        {"ingest", source_path("data/demo/external_scores.csv").string()},
                                                        {"metric_name", "ext"},
                                                        {"out", out}}),
                                           demo.env);
    EXPECT_EQ(demo.mock->invocations(), 0u);
    EXPECT_FALSE(outcome.warnings.empty());
    const auto table = io::read_score_table(out);
    EXPECT_EQ(table.rows().size(), 20u);
    EXPECT_EQ(table.column("ext").provenance, baselines::Provenance::Ingested);
    for (const auto& key : table.rows()) {
        for (const char* col : {"bleu4", "rouge_l"}) {
            const double v = *table.get(key, col);
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
    }
    EXPECT_EQ(read_rows(out + ".systems.csv").size(), 4u);
}
