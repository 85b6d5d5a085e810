#pragma once

#include "tl/config.hpp"
#include "tl/metric.hpp"
#include "tl/store.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace tl {

// Stage DAG: corpus -> summarize -> topics -> select(s) -> label(s) -> evaluate.
// Every stage artifact is content-addressed by a key derived from its input
// hashes, so reruns and resume are cache hits.

struct StrategyOutcome {
    Strategy strategy = Strategy::overlap;
    bool failed = false;
    std::string error; // provider failures are isolated per strategy
    std::vector<Label> labels;
    MetricReport report;
};

struct RunOutcome {
    nlohmann::json manifest; // deterministic under mock providers
    std::filesystem::path manifest_path;
    std::map<std::string, bool> stage_executed; // stage name -> computed this run
    std::map<std::string, double> stage_ms;     // volatile; written to timings.json
    std::vector<StrategyOutcome> strategies;
    bool any_strategy_failed = false;
};

/// Executes the full flow, persisting every stage to <out>/store and the
/// manifest to <out>/manifest.json. Stages whose store entry already exists
/// (and whose inputs did not re-execute) are skipped.
RunOutcome run_pipeline(const RunConfig& config);

/// Re-reads the manifest's config snapshot hash and re-runs with the given
/// config; a changed fingerprint is ConfigDriftError. Missing or unreadable
/// store entries referenced by the manifest are recomputed.
RunOutcome resume_pipeline(const std::filesystem::path& manifest_path, const RunConfig& config);

// Store stage names.
namespace stage {
inline constexpr const char* corpus = "corpus";
inline constexpr const char* summaries = "summaries";
inline constexpr const char* topics = "topics";
inline constexpr const char* selections = "selections";
inline constexpr const char* labels = "labels";
inline constexpr const char* report = "report";
} // namespace stage

std::string summaries_to_json(const std::vector<Summary>& summaries);
std::vector<Summary> summaries_from_json(const std::string& json_text);
std::string labels_to_json(const std::vector<Label>& labels);
std::vector<Label> labels_from_json(const std::string& json_text);

} // namespace tl
