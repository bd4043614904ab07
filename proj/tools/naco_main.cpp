// naco: command-line front end for calibration, scoring, baselines and analysis.

#include <iostream>
#include <map>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "naco/app/commands.hpp"
#include "naco/core/errors.hpp"

namespace {

using naco::app::Settings;

const std::set<std::string> kBooleanKeys = {"no_cache", "requery_degraded",
                                            "override_expected_from_reference", "append_reference"};

std::string flag_name(std::string key) {
    for (auto& ch : key) {
        if (ch == '_') ch = '-';
    }
    return "--" + key;
}

// Every setting key becomes a flag on every subcommand; only flags that were
// given end up in the settings map, so env and config file values still apply.
struct FlagSet {
    std::map<std::string, std::string> values;
    std::map<std::string, bool> switches;
    std::vector<std::string> scores;
    std::string config;

    void attach(CLI::App* app) {
        app->add_option("--config", config, "Flat JSON config file");
        for (const auto& key : naco::app::setting_keys()) {
            if (kBooleanKeys.count(key)) {
                app->add_flag(flag_name(key), switches[key]);
            } else if (key == "scores") {
                app->add_option("--scores", scores, "Score table CSV (repeatable)");
            } else {
                app->add_option(flag_name(key), values[key]);
            }
        }
    }

    Settings collect(const CLI::App* app) const {
        Settings s;
        if (!config.empty()) s["config"] = config;
        for (const auto& [key, value] : values) {
            if (app->count(flag_name(key)) > 0) s[key] = value;
        }
        for (const auto& [key, on] : switches) {
            if (app->count(flag_name(key)) > 0) s[key] = on ? "true" : "false";
        }
        if (!scores.empty()) {
            std::string joined;
            for (const auto& p : scores) joined += (joined.empty() ? "" : ",") + p;
            s["scores"] = joined;
        }
        return s;
    }
};

void report(const naco::app::CommandOutcome& outcome, bool show_gateway) {
    for (const auto& w : outcome.warnings) std::cerr << "warning: " << w << "\n";
    for (const auto& f : outcome.failures) std::cerr << "failed: " << f << "\n";
    if (show_gateway) {
        const auto& g = outcome.gateway;
        std::cerr << "requests: " << g.provider_invocations << " provider calls, " << g.cache_hits
                  << " cache hits, " << g.cache_misses << " misses, " << g.retries << " retries\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reference-free evaluation of generated questions"};
    app.require_subcommand(1);

    std::map<std::string, FlagSet> flags;
    auto* calibrate = app.add_subcommand("calibrate", "Derive the expected complexity of a dataset");
    auto* score = app.add_subcommand("score", "Score candidate questions");
    auto* direct = app.add_subcommand("direct-eval", "Score candidates with the direct rubric prompt");
    auto* baseline = app.add_subcommand("baseline", "Reference-based BLEU-4 / ROUGE-L and ingested metrics");
    auto* correlate = app.add_subcommand("correlate", "Correlate metric columns with human ratings");
    auto* groups = app.add_subcommand("groups", "Per-group metric means and gaps");
    auto* cache = app.add_subcommand("cache", "Inspect or clear the response cache");
    std::string cache_action = "stats";
    cache->add_option("action", cache_action, "stats | clear")->check(CLI::IsMember({"stats", "clear"}));

    for (auto* sub : {calibrate, score, direct, baseline, correlate, groups, cache}) {
        flags[sub->get_name()].attach(sub);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        for (auto* sub : app.get_subcommands()) {
            auto settings = flags.at(sub->get_name()).collect(sub);
            const std::string name = sub->get_name();
            if (name == "direct-eval") settings["mode"] = "direct-eval";
            const auto config = naco::app::resolve_config(settings);

            naco::app::CommandOutcome outcome;
            bool gateway = false;
            if (name == "calibrate") {
                outcome = naco::app::cmd_calibrate(config);
                gateway = true;
            } else if (name == "score" || name == "direct-eval") {
                outcome = naco::app::cmd_score(config);
                gateway = true;
            } else if (name == "baseline") {
                outcome = naco::app::cmd_baseline(config);
            } else if (name == "correlate") {
                outcome = naco::app::cmd_correlate(config);
            } else if (name == "groups") {
                outcome = naco::app::cmd_groups(config);
            } else {
                outcome = naco::app::cmd_cache(config, cache_action);
            }
            report(outcome, gateway);
            return outcome.exit_code;
        }
    } catch (const naco::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
