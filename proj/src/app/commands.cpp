#include "naco/app/commands.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "naco/analysis/correlation.hpp"
#include "naco/analysis/disagreement.hpp"
#include "naco/analysis/groups.hpp"
#include "naco/analysis/normalize.hpp"
#include "naco/analysis/ratings.hpp"
#include "naco/app/batch.hpp"
#include "naco/baselines/bleu.hpp"
#include "naco/baselines/ingest.hpp"
#include "naco/baselines/rouge.hpp"
#include "naco/core/errors.hpp"
#include "naco/core/sampling.hpp"
#include "naco/io/csv.hpp"
#include "naco/io/datasets.hpp"
#include "naco/io/profile_io.hpp"
#include "naco/io/score_table_io.hpp"
#include "naco/llm/http_provider.hpp"
#include "naco/llm/mock_provider.hpp"
#include "naco/prompts/prompts.hpp"
#include "naco/scoring/candidate_scorer.hpp"

namespace naco::app {

using json = nlohmann::json;
using baselines::RowKey;
using baselines::ScoreTable;

namespace {

std::ostream& log_of(const Environment& env) { return env.log ? *env.log : std::cerr; }

std::string describe(const std::exception_ptr& error) {
    try {
        std::rethrow_exception(error);
    } catch (const std::exception& e) {
        return e.what();
    } catch (...) {
        return "unknown error";
    }
}

// Errors that make every further request pointless abort the batch.
bool is_hard(const std::exception_ptr& error) {
    try {
        std::rethrow_exception(error);
    } catch (const AuthError&) {
        return true;
    } catch (const RateLimitExhausted&) {
        return true;
    } catch (const CacheCorrupt&) {
        return true;
    } catch (...) {
        return false;
    }
}

void require_path(const std::string& value, const char* flag) {
    if (value.empty()) throw PreconditionError(std::string("missing required --") + flag);
}

std::string fmt(double v) { return std::isfinite(v) ? io::format_number(v) : "nan"; }

std::optional<io::DatasetManifest> maybe_manifest(const RunConfig& config) {
    if (config.manifest.empty()) return std::nullopt;
    return io::load_manifest(config.manifest);
}

std::vector<QGExample> load_examples(const RunConfig& config) {
    require_path(config.examples, "examples");
    return io::load_examples(config.examples, maybe_manifest(config));
}

std::unique_ptr<llm::Gateway> make_gateway(const RunConfig& config, const Environment& env) {
    std::shared_ptr<llm::Provider> provider = env.provider;
    if (!provider) {
        if (config.model.provider_id == "mock") {
            if (config.mock_fixtures.empty()) {
                throw PreconditionError("the mock provider needs --mock-fixtures");
            }
            provider = std::make_shared<llm::MockProvider>(config.mock_fixtures);
        } else {
            if (config.model.endpoint.empty()) {
                throw PreconditionError("provider '" + config.model.provider_id + "' needs --endpoint");
            }
            provider = std::make_shared<llm::HttpChatProvider>(
                llm::HttpChatProvider::format_for(config.model.provider_id));
        }
    }
    std::optional<llm::ResponseCache> cache;
    if (config.use_cache) cache.emplace(config.cache_root);
    return std::make_unique<llm::Gateway>(std::move(provider), config.limits, std::move(cache));
}

const QGExample& example_for(const std::map<std::string, const QGExample*>& index,
                             const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) throw UnknownExampleId("unknown example id '" + id + "'");
    return *it->second;
}

std::map<std::string, const QGExample*> index_examples(const std::vector<QGExample>& examples) {
    std::map<std::string, const QGExample*> index;
    for (const auto& ex : examples) index.emplace(ex.id, &ex);
    return index;
}

ScoreTable merged_scores(const RunConfig& config) {
    if (config.scores.empty()) throw PreconditionError("missing required --scores");
    ScoreTable table;
    for (const auto& path : config.scores) table.merge(io::read_score_table(path));
    return table;
}

void write_failures(const std::string& path, const std::vector<std::array<std::string, 3>>& rows) {
    std::string out = io::csv_line({"example_id", "system", "error"});
    for (const auto& r : rows) out += io::csv_line({r[0], r[1], r[2]});
    io::write_text_file(path, out);
}

}  // namespace

// ---------------------------------------------------------------------------
// calibrate

CommandOutcome cmd_calibrate(const RunConfig& config, const Environment& env) {
    config.validate();
    const std::string out_path = config.profile.empty() ? config.out : config.profile;
    require_path(out_path, "profile");
    const auto manifest = maybe_manifest(config);
    const auto examples = load_examples(config);

    std::vector<const QGExample*> with_reference;
    for (const auto& ex : examples) {
        if (ex.reference_question) with_reference.push_back(&ex);
    }
    if (with_reference.empty()) {
        throw PreconditionError("calibration needs reference questions; " + config.examples +
                                " has none");
    }
    std::string dataset_id = manifest ? manifest->dataset_id : with_reference.front()->dataset_id;
    for (const auto* ex : with_reference) {
        if (!manifest && ex->dataset_id != dataset_id) {
            throw PreconditionError("calibration examples mix datasets '" + dataset_id + "' and '" +
                                    ex->dataset_id + "'");
        }
    }
    std::vector<const QGExample*> sample;
    for (auto i : core::sample_indices(with_reference.size(),
                                       static_cast<std::size_t>(config.calibration_sample),
                                       config.seed)) {
        sample.push_back(with_reference[i]);
    }

    auto gateway = make_gateway(config, env);
    scoring::CandidateScorer scorer(*gateway, config.model, config.score);
    ResultCollector<parse::CoTTrace> collector(sample.size());
    const auto errors = run_jobs(sample.size(), config.parallelism, [&](std::size_t i) {
        collector.put(i, scorer.cot_trace(*sample[i], *sample[i]->reference_question, 0));
    });
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (errors[i]) {
            throw Error("calibration query for example '" + sample[i]->id +
                        "' failed: " + describe(errors[i]));
        }
    }
    std::vector<parse::CoTTrace> traces;
    for (auto& t : collector.take()) traces.push_back(std::move(*t));

    auto profile = scoring::calibrate_expected_complexity(traces, dataset_id);
    profile.prompt_template_version = std::string(prompts::cot_qa_template_version());
    profile.model_name = config.model.model_name;
    io::write_profile(profile, out_path);

    CommandOutcome outcome;
    outcome.gateway = gateway->counters();
    std::size_t degraded = 0;
    for (const auto& t : traces) degraded += t.degraded ? 1 : 0;
    if (degraded > 0) {
        outcome.warnings.push_back(std::to_string(degraded) + " reference responses were malformed");
    }
    log_of(env) << "calibrate: dataset " << dataset_id << ", " << traces.size()
                << " references, expected complexity " << profile.expected_complexity << " -> "
                << out_path << "\n";
    return outcome;
}

// ---------------------------------------------------------------------------
// score

namespace {

CommandOutcome score_direct_eval(const RunConfig& config, const Environment& env,
                                 const std::vector<CandidateQuestion>& candidates,
                                 const std::map<std::string, const QGExample*>& index) {
    auto gateway = make_gateway(config, env);
    scoring::CandidateScorer scorer(*gateway, config.model, config.score);
    const auto runs = static_cast<std::size_t>(config.score.runs);
    const std::size_t jobs = candidates.size() * runs;

    ResultCollector<parse::DirectEvalScores> collector(jobs);
    const auto errors = run_jobs(jobs, config.parallelism, [&](std::size_t j) {
        const auto& cand = candidates[j / runs];
        collector.put(j, scorer.direct_eval_run(example_for(index, cand.example_id), cand,
                                                config.append_reference,
                                                static_cast<std::uint32_t>(j % runs)));
    });
    for (const auto& e : errors) {
        if (e && is_hard(e)) std::rethrow_exception(e);
    }
    auto results = collector.take();

    CommandOutcome outcome;
    ScoreTable table;
    for (const char* col : {"direct_naturalness", "direct_answerability", "direct_complexity",
                            "direct_total", "runs_used"}) {
        table.add_column(col);
    }
    std::vector<std::array<std::string, 3>> failures;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const auto& cand = candidates[c];
        std::vector<parse::DirectEvalScores> ok;
        for (std::size_t r = 0; r < runs; ++r) {
            const auto j = c * runs + r;
            if (results[j]) {
                ok.push_back(*results[j]);
            } else {
                failures.push_back({cand.example_id, cand.system,
                                    "run " + std::to_string(r) + ": " + describe(errors[j])});
            }
        }
        if (ok.empty()) continue;
        const auto agg = scoring::CandidateScorer::combine_direct_eval(ok);
        const RowKey key{cand.example_id, cand.system};
        table.set(key, "direct_naturalness", agg.naturalness);
        table.set(key, "direct_answerability", agg.answerability);
        table.set(key, "direct_complexity", agg.complexity);
        table.set(key, "direct_total", agg.total);
        table.set(key, "runs_used", agg.runs_used);
    }
    for (const auto& f : failures) outcome.failures.push_back(f[0] + "/" + f[1] + ": " + f[2]);

    io::write_score_table(table, config.out,
                          {{"mode", "direct-eval"},
                           {"prompt_template_version", std::string(prompts::direct_eval_template_version())},
                           {"provider", config.model.provider_id},
                           {"model", config.model.model_name},
                           {"runs", std::to_string(config.score.runs)},
                           {"append_reference", config.append_reference ? "true" : "false"}});
    write_failures(config.out + ".failures.csv", failures);
    outcome.gateway = gateway->counters();
    log_of(env) << "score (direct-eval): " << table.rows().size() << " candidates scored, "
                << failures.size() << " failures -> " << config.out << "\n";
    return outcome;
}

json run_record_json(const CandidateQuestion& cand, const scoring::RunRecord& r) {
    json j = {{"example_id", cand.example_id},
              {"system", cand.system},
              {"run_index", r.run_index},
              {"verdict", std::string(parse::to_string(r.verdict))},
              {"steps", r.steps},
              {"expected_complexity", r.expected_complexity},
              {"n", r.n},
              {"a", r.a},
              {"c", r.c},
              {"naco", r.naco}};
    j["answer"] = r.answer ? json(*r.answer) : json(nullptr);
    if (r.degraded) j["degraded"] = *r.degraded;
    return j;
}

}  // namespace

CommandOutcome cmd_score(const RunConfig& config, const Environment& env) {
    config.validate();
    require_path(config.out, "out");
    require_path(config.candidates, "candidates");
    const auto examples = load_examples(config);
    const auto candidates = io::load_candidates(config.candidates, examples);
    const auto index = index_examples(examples);

    const bool needs_reference =
        (config.mode == "cot-qa" && config.override_expected_from_reference) ||
        (config.mode == "direct-eval" && config.append_reference);
    if (needs_reference) {
        for (const auto& cand : candidates) {
            if (!example_for(index, cand.example_id).reference_question) {
                throw PreconditionError("example '" + cand.example_id +
                                        "' has no reference question, which the requested mode needs");
            }
        }
    }
    if (config.mode == "direct-eval") return score_direct_eval(config, env, candidates, index);

    std::optional<scoring::CalibrationProfile> profile;
    if (!config.profile.empty() && std::filesystem::exists(config.profile)) {
        profile = io::read_profile(config.profile);
    } else if (!config.override_expected_from_reference) {
        throw PreconditionError(config.profile.empty()
                                    ? "scoring needs --profile (or --override-expected-from-reference)"
                                    : "calibration profile " + config.profile + " does not exist; run calibrate first");
    }

    auto gateway = make_gateway(config, env);
    scoring::CandidateScorer scorer(*gateway, config.model, config.score);
    CommandOutcome outcome;
    std::vector<std::array<std::string, 3>> failures;

    // Expected complexity per example.
    std::map<std::string, int> expected;
    if (config.override_expected_from_reference) {
        std::vector<const QGExample*> needed;
        std::set<std::string> seen;
        for (const auto& cand : candidates) {
            if (seen.insert(cand.example_id).second) needed.push_back(&example_for(index, cand.example_id));
        }
        ResultCollector<std::optional<int>> collector(needed.size());
        const auto errors = run_jobs(needed.size(), config.parallelism, [&](std::size_t i) {
            collector.put(i, scorer.reference_complexity(*needed[i]));
        });
        auto results = collector.take();
        for (std::size_t i = 0; i < needed.size(); ++i) {
            if (errors[i] && is_hard(errors[i])) std::rethrow_exception(errors[i]);
            if (results[i] && *results[i]) {
                expected[needed[i]->id] = **results[i];
            } else if (profile) {
                expected[needed[i]->id] = profile->expected_complexity;
                outcome.warnings.push_back("example '" + needed[i]->id +
                                           "': reference trace unusable, using the dataset profile");
            }
        }
    } else {
        for (const auto& ex : examples) expected[ex.id] = profile->expected_complexity;
    }

    const auto runs = static_cast<std::size_t>(config.score.runs);
    const std::size_t jobs = candidates.size() * runs;
    ResultCollector<scoring::RunRecord> collector(jobs);
    const auto errors = run_jobs(jobs, config.parallelism, [&](std::size_t j) {
        const auto& cand = candidates[j / runs];
        auto it = expected.find(cand.example_id);
        if (it == expected.end()) {
            throw NoUsableTraces("no expected complexity: the reference question produced no usable trace");
        }
        collector.put(j, scorer.score_run(example_for(index, cand.example_id), cand, it->second,
                                          static_cast<std::uint32_t>(j % runs)));
    });
    for (const auto& e : errors) {
        if (e && is_hard(e)) std::rethrow_exception(e);
    }
    auto results = collector.take();

    ScoreTable table;
    for (const char* col : {"naco", "n_cand", "a_cand", "c_cand", "c_cand_abs", "runs_used"}) {
        table.add_column(col);
    }
    std::string runs_log;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const auto& cand = candidates[c];
        std::vector<scoring::RunRecord> ok;
        for (std::size_t r = 0; r < runs; ++r) {
            const auto j = c * runs + r;
            if (results[j]) {
                ok.push_back(*results[j]);
                runs_log += run_record_json(cand, *results[j]).dump() + "\n";
            } else {
                failures.push_back({cand.example_id, cand.system,
                                    "run " + std::to_string(r) + ": " + describe(errors[j])});
            }
        }
        if (ok.empty()) continue;
        const auto s = scorer.combine(ok);
        const RowKey key{cand.example_id, cand.system};
        const auto& sc = config.score;
        table.set(key, "naco", sc.display(s.naco));
        table.set(key, "n_cand", sc.display(s.n_cand));
        table.set(key, "a_cand", sc.display(s.a_cand));
        table.set(key, "c_cand", sc.display(s.c_cand));
        table.set(key, "c_cand_abs", s.c_cand_abs);
        table.set(key, "runs_used", s.runs_used);
    }
    for (const auto& f : failures) outcome.failures.push_back(f[0] + "/" + f[1] + ": " + f[2]);

    io::Metadata meta = {
        {"mode", "cot-qa"},
        {"prompt_template_version", std::string(prompts::cot_qa_template_version())},
        {"provider", config.model.provider_id},
        {"model", config.model.model_name},
        {"runs", std::to_string(config.score.runs)},
        {"scale", config.score.display_scale == scoring::DisplayScale::Percent ? "percent" : "unit"},
        {"zeroing", config.score.zeroing == scoring::ZeroingRule::Either ? "either" : "both"},
        {"averaging", config.score.averaging == scoring::RunAveraging::MeanOfRunScores ? "runs"
                                                                                        : "components"},
        {"expected_complexity_source",
         config.override_expected_from_reference ? "reference-question" : "profile"}};
    if (profile) {
        meta["profile_dataset_id"] = profile->dataset_id;
        meta["profile_expected_complexity"] = std::to_string(profile->expected_complexity);
    }
    io::write_score_table(table, config.out, meta);
    write_failures(config.out + ".failures.csv", failures);
    io::write_text_file(config.out + ".runs.jsonl", runs_log);

    outcome.gateway = gateway->counters();
    log_of(env) << "score: " << table.rows().size() << " candidates scored, " << failures.size()
                << " failures -> " << config.out << "\n";
    return outcome;
}

// ---------------------------------------------------------------------------
// baseline

CommandOutcome cmd_baseline(const RunConfig& config, const Environment& env) {
    config.validate();
    require_path(config.out, "out");
    require_path(config.candidates, "candidates");
    const auto examples = load_examples(config);
    const auto candidates = io::load_candidates(config.candidates, examples);

    const bool want_bleu = config.metric == "all" || config.metric == "bleu4";
    const bool want_rouge = config.metric == "all" || config.metric == "rouge_l";
    if (!want_bleu && !want_rouge && config.metric != "none") {
        throw PreconditionError("--metric must be bleu4, rouge_l, all or none");
    }
    if (!config.ingest.empty() && config.metric_name.empty()) {
        throw PreconditionError("--ingest needs --metric-name");
    }

    std::map<std::string, std::vector<std::string>> refs;
    for (const auto& ex : examples) {
        if (ex.reference_question) refs[ex.id].push_back(*ex.reference_question);
    }
    if (!config.references.empty()) {
        for (auto& [id, extra] : io::load_references(config.references)) {
            for (auto& r : extra) refs[id].push_back(std::move(r));
        }
    }

    CommandOutcome outcome;
    ScoreTable table;
    if (want_bleu) table.add_column("bleu4");
    if (want_rouge) table.add_column("rouge_l");
    std::vector<std::array<std::string, 3>> failures;

    struct SystemAcc {
        std::vector<std::string> hyps;
        std::vector<std::vector<std::string>> refs;
        double bleu_sum = 0.0;
        double rouge_sum = 0.0;
    };
    std::map<std::string, SystemAcc> systems;

    if (want_bleu || want_rouge) {
        for (const auto& cand : candidates) {
            const RowKey key{cand.example_id, cand.system};
            auto it = refs.find(cand.example_id);
            if (it == refs.end() || it->second.empty()) {
                failures.push_back({cand.example_id, cand.system, "no reference question"});
                continue;
            }
            std::vector<double> bleu_scores, rouge_scores;
            for (const auto& ref : it->second) {
                if (want_bleu) bleu_scores.push_back(baselines::bleu4(cand.text, std::span(&ref, 1)));
                if (want_rouge) rouge_scores.push_back(baselines::rouge_l(cand.text, ref));
            }
            auto& acc = systems[cand.system];
            table.add_row(key);
            if (want_bleu) {
                const double b = baselines::max_over_references(bleu_scores);
                table.set(key, "bleu4", b);
                acc.bleu_sum += b;
            }
            if (want_rouge) {
                const double r = baselines::max_over_references(rouge_scores);
                table.set(key, "rouge_l", r);
                acc.rouge_sum += r;
            }
            acc.hyps.push_back(cand.text);
            acc.refs.push_back(it->second);
        }
    }

    if (!config.ingest.empty()) {
        auto ingested = baselines::ingest_external_scores(config.ingest, config.metric_name, candidates);
        if (!ingested.coverage_gap.empty()) {
            std::string ids;
            for (const auto& k : ingested.coverage_gap) ids += (ids.empty() ? "" : ", ") + k.example_id + "/" + k.system;
            outcome.warnings.push_back("coverage gap in " + config.ingest + " (" +
                                       std::to_string(ingested.coverage_gap.size()) + " missing): " + ids);
        }
        table.merge(ingested.table);
    }

    io::write_score_table(table, config.out,
                          {{"aggregation", "max over references"}, {"tokenizer", "lowercase, punctuation split"}});
    write_failures(config.out + ".failures.csv", failures);

    std::string sys = io::csv_line({"system", "n", "corpus_bleu4", "mean_bleu4", "mean_rouge_l"});
    for (const auto& [name, acc] : systems) {
        const auto n = static_cast<double>(acc.hyps.size());
        sys += io::csv_line({name, std::to_string(acc.hyps.size()),
                             want_bleu ? fmt(baselines::corpus_bleu4(acc.hyps, acc.refs)) : "",
                             want_bleu ? fmt(acc.bleu_sum / n) : "",
                             want_rouge ? fmt(acc.rouge_sum / n) : ""});
    }
    io::write_text_file(config.out + ".systems.csv", sys);

    for (const auto& f : failures) outcome.failures.push_back(f[0] + "/" + f[1] + ": " + f[2]);
    log_of(env) << "baseline: " << table.rows().size() << " rows -> " << config.out << "\n";
    return outcome;
}

// ---------------------------------------------------------------------------
// correlate

CommandOutcome cmd_correlate(const RunConfig& config, const Environment& env) {
    require_path(config.out, "out");
    require_path(config.ratings, "ratings");
    const ScoreTable table = merged_scores(config);
    const auto ratings = io::load_ratings(config.ratings);
    const auto aggregated = analysis::aggregate_human_ratings(ratings);
    std::map<RowKey, const analysis::AggregatedRating*> by_key;
    for (const auto& a : aggregated) by_key.emplace(RowKey{a.example_id, a.system}, &a);

    CommandOutcome outcome;
    using Target = double (*)(const analysis::AggregatedRating&);
    const std::vector<std::pair<std::string, Target>> targets = {
        {"naturalness", [](const analysis::AggregatedRating& a) { return a.mean_naturalness; }},
        {"answerability", [](const analysis::AggregatedRating& a) { return a.mean_answerability; }},
        {"complexity", [](const analysis::AggregatedRating& a) { return a.mean_complexity; }},
        {"overall", [](const analysis::AggregatedRating& a) { return a.mean_total; }},
    };

    std::string csv = io::csv_line({"metric", "target", "pearson", "spearman", "kendall", "n"});
    std::ostringstream text;
    text << "Correlation with aggregated human ratings (Kendall tau-b; overall = sum of criterion means)\n\n";
    for (const auto& column : table.columns()) {
        if (column.name == "runs_used") continue;
        for (const auto& [target, pick] : targets) {
            std::vector<double> xs, ys;
            for (const auto& row : table.rows()) {
                const auto v = table.get(row, column.name);
                auto it = by_key.find(row);
                if (v && it != by_key.end()) {
                    xs.push_back(*v);
                    ys.push_back(pick(*it->second));
                }
            }
            analysis::CorrelationReport report{column.name, target, NAN, NAN, NAN, xs.size()};
            try {
                report = analysis::correlate(column.name, target, xs, ys);
            } catch (const DegenerateInput& e) {
                outcome.warnings.push_back(column.name + " vs " + target + ": " + e.what());
            }
            csv += io::csv_line({report.metric, report.target, fmt(report.pearson_r),
                                 fmt(report.spearman_rho), fmt(report.kendall_tau),
                                 std::to_string(report.n)});
            char line[256];
            std::snprintf(line, sizeof(line), "%-22s %-14s r=%8.4f  rho=%8.4f  tau=%8.4f  n=%zu\n",
                          report.metric.c_str(), report.target.c_str(), report.pearson_r,
                          report.spearman_rho, report.kendall_tau, report.n);
            text << line;
        }
    }
    io::write_text_file(config.out, csv);
    io::write_text_file(config.out + ".txt", text.str());

    if (config.disagreement_pairs > 0) {
        if (!table.has_column(config.reference_metric)) {
            throw PreconditionError("scores lack the reference metric '" + config.reference_metric + "'");
        }
        std::string pairs = io::csv_line(
            {"metric_a", "metric_b", "example_id_1", "system_1", "example_id_2", "system_2"});
        for (const auto& column : table.columns()) {
            if (column.name == config.reference_metric || column.name == "runs_used") continue;
            const auto sample = analysis::sample_disagreement_pairs(
                table, config.reference_metric, column.name,
                static_cast<std::size_t>(config.disagreement_pairs), config.seed);
            if (sample.not_enough) {
                outcome.warnings.push_back("only " + std::to_string(sample.available) + " pairs where " +
                                           config.reference_metric + " and " + column.name + " disagree");
            }
            for (const auto& [p, q] : sample.pairs) {
                pairs += io::csv_line({config.reference_metric, column.name, p.example_id, p.system,
                                       q.example_id, q.system});
            }
        }
        io::write_text_file(config.out + ".disagreements.csv", pairs);
    }
    log_of(env) << "correlate: " << table.columns().size() << " metrics x " << targets.size()
                << " targets -> " << config.out << "\n";
    return outcome;
}

// ---------------------------------------------------------------------------
// groups

CommandOutcome cmd_groups(const RunConfig& config, const Environment& env) {
    require_path(config.out, "out");
    const ScoreTable table = merged_scores(config);
    std::map<std::string, std::string> tags;
    if (!config.groups.empty()) {
        try {
            tags = json::parse(io::read_text_file(config.groups)).get<std::map<std::string, std::string>>();
        } catch (const json::exception& e) {
            throw PreconditionError("groups file " + config.groups + ": " + e.what());
        }
    }
    const auto raw = analysis::group_summary(table, tags);
    const auto normalized = analysis::group_summary(analysis::normalize_columns(table), tags);

    std::string csv = io::csv_line({"group", "metric", "mean", "normalized_mean", "count"});
    std::ostringstream text;
    text << "Group means (normalized = per-metric min-max over all scored candidates)\n\n";
    for (const auto& metric : raw.metrics) {
        if (metric == "runs_used") continue;
        text << metric << "\n";
        for (const auto& group : raw.groups) {
            const auto m = raw.mean(group, metric);
            const auto nm = normalized.mean(group, metric);
            const auto count = raw.stats.at({group, metric}).count;
            csv += io::csv_line({group, metric, m ? fmt(*m) : "", nm ? fmt(*nm) : "",
                                 std::to_string(count)});
            char line[256];
            std::snprintf(line, sizeof(line), "  %-20s mean=%9.4f  normalized=%7.4f  n=%zu\n",
                          group.c_str(), m ? *m : NAN, nm ? *nm : NAN, count);
            text << line;
        }
    }
    std::string gaps = io::csv_line({"metric", "group_a", "group_b", "gap", "normalized_gap"});
    for (std::size_t i = 0; i < raw.gaps.size(); ++i) {
        const auto& g = raw.gaps[i];
        if (g.metric == "runs_used") continue;
        std::string ngap;
        for (const auto& n : normalized.gaps) {
            if (n.metric == g.metric && n.group_a == g.group_a && n.group_b == g.group_b) ngap = fmt(n.gap);
        }
        gaps += io::csv_line({g.metric, g.group_a, g.group_b, fmt(g.gap), ngap});
    }
    io::write_text_file(config.out, csv);
    io::write_text_file(config.out + ".gaps.csv", gaps);
    io::write_text_file(config.out + ".txt", text.str());
    log_of(env) << "groups: " << raw.groups.size() << " groups x " << raw.metrics.size()
                << " metrics -> " << config.out << "\n";
    return {};
}

// ---------------------------------------------------------------------------
// cache

CommandOutcome cmd_cache(const RunConfig& config, const std::string& action, const Environment& env) {
    llm::ResponseCache cache(config.cache_root);
    if (action == "clear") {
        const auto removed = cache.clear();
        log_of(env) << "cache: removed " << removed << " entries from " << config.cache_root << "\n";
    } else if (action == "stats") {
        const auto stats = cache.stats();
        log_of(env) << "cache: " << stats.entries << " entries, " << stats.bytes << " bytes in "
                    << config.cache_root << "\n";
    } else {
        throw PreconditionError("cache action must be 'stats' or 'clear'");
    }
    return {};
}

}  // namespace naco::app
