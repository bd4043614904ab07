#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "naco/app/run_config.hpp"
#include "naco/llm/gateway.hpp"
#include "naco/llm/provider.hpp"

namespace naco::app {

/// Injection points for embedding the commands (tests supply an instrumented provider).
struct Environment {
    std::shared_ptr<llm::Provider> provider;  // overrides the provider built from the config
    std::ostream* log = nullptr;              // progress messages; std::cerr when null
};

/// Result of a command that completed. Hard errors are thrown instead.
struct CommandOutcome {
    int exit_code = 0;
    llm::GatewayCounters gateway;
    std::vector<std::string> failures;  // per-candidate soft failures
    std::vector<std::string> warnings;
};

/// CoT-QA over up to config.calibration_sample reference questions; writes the
/// calibration profile to config.profile (or config.out).
CommandOutcome cmd_calibrate(const RunConfig& config, const Environment& env = {});

/// Scores every candidate; writes the score table to config.out together with
/// `<out>.meta.json`, `<out>.failures.csv` and `<out>.runs.jsonl`.
CommandOutcome cmd_score(const RunConfig& config, const Environment& env = {});

/// BLEU-4 / ROUGE-L against the reference question(s), max-aggregated, plus an
/// optional ingested external metric; writes config.out and `<out>.systems.csv`.
CommandOutcome cmd_baseline(const RunConfig& config, const Environment& env = {});

/// Pearson / Spearman / Kendall tau-b of every metric column against the
/// aggregated human ratings; writes config.out and `<out>.txt`, plus
/// `<out>.disagreements.csv` when disagreement_pairs > 0.
CommandOutcome cmd_correlate(const RunConfig& config, const Environment& env = {});

/// Per-group metric means (raw and min-max normalized) and pairwise gaps;
/// writes config.out, `<out>.gaps.csv` and `<out>.txt`.
CommandOutcome cmd_groups(const RunConfig& config, const Environment& env = {});

/// action: "stats" or "clear".
CommandOutcome cmd_cache(const RunConfig& config, const std::string& action,
                         const Environment& env = {});

}  // namespace naco::app
