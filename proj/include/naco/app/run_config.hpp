#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "naco/llm/gateway.hpp"
#include "naco/llm/model_config.hpp"
#include "naco/scoring/scoring.hpp"

namespace naco::app {

/// Everything a command needs. Built by layering settings:
/// flag > environment (NACO_<KEY>) > config file (flat JSON) > default.
struct RunConfig {
    llm::ModelConfig model;
    scoring::ScoreConfig score;
    llm::GatewayLimits limits;

    std::string examples;
    std::string manifest;
    std::string candidates;
    std::string profile;
    std::string cache_root = ".naco-cache";
    bool use_cache = true;
    std::string out;
    std::string mock_fixtures;

    std::uint64_t seed = 0;
    int parallelism = 4;
    int calibration_sample = 750;

    std::string mode = "cot-qa";  // cot-qa | direct-eval
    bool override_expected_from_reference = false;
    bool append_reference = false;

    // baseline
    std::string metric = "all";  // bleu4 | rouge_l | all
    std::string references;
    std::string ingest;
    std::string metric_name;

    // correlate / groups
    std::vector<std::string> scores;
    std::string ratings;
    std::string groups;
    std::string reference_metric = "naco";
    int disagreement_pairs = 0;

    /// Throws PreconditionError on inconsistent values.
    void validate() const;
};

using Settings = std::map<std::string, std::string>;

/// Keys accepted in config files, in NACO_* variables and as --flags.
const std::vector<std::string>& setting_keys();

/// Applies one setting (key as in setting_keys(), '-' or '_' separated).
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Flat JSON object -> settings. Non-string values are stringified.
Settings load_config_file(const std::string& path);

/// NACO_<KEY> variables that are set.
Settings settings_from_environment();

/// Layers file, environment and flag settings over the defaults.
RunConfig resolve_config(const Settings& flags);

}  // namespace naco::app
